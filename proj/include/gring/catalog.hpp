#pragma once

#include "gring/group.hpp"

namespace gring {

// Built-in desk-scale groups used by the fixture corpus and the test suites.
// Each call returns a shared immutable instance.
namespace catalog {

const FiniteGroup& c1();
const FiniteGroup& c2();
const FiniteGroup& c3();
const FiniteGroup& c4();
const FiniteGroup& c6();
const FiniteGroup& c2c2();
const FiniteGroup& s3();
const FiniteGroup& d4();  // dihedral of order 8
const FiniteGroup& q8();
const FiniteGroup& a4();

// Lookup by the names above ("C2", "C2xC2", "S3", "D4", "Q8", "A4", ...).
// Throws InputError for unknown names.
const FiniteGroup& by_name(const std::string& name);

// Names in fixture order.
std::vector<std::string> names();

}  // namespace catalog
}  // namespace gring
