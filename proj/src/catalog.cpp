#include "gring/catalog.hpp"

#include "gring/errors.hpp"

namespace gring::catalog {

namespace {

FiniteGroup make_c2c2() {
    // indices: e, a, b, ab  (componentwise xor)
    std::vector<unsigned> mul(16);
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) mul[i * 4 + j] = i ^ j;
    return FiniteGroup("C2xC2", 4, mul, {"e", "a", "b", "ab"});
}

FiniteGroup make_d4() {
    // index = a + 4b for r^a s^b; s r = r^{-1} s
    auto idx = [](unsigned a, unsigned b) { return a + 4 * b; };
    std::vector<unsigned> mul(64);
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 2; ++b)
            for (unsigned c = 0; c < 4; ++c)
                for (unsigned d = 0; d < 2; ++d) {
                    unsigned aa = (b == 0) ? (a + c) % 4 : (a + 4 - c % 4) % 4;
                    mul[idx(a, b) * 8 + idx(c, d)] = idx(aa, b ^ d);
                }
    return FiniteGroup("D4", 8, mul, {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"});
}

FiniteGroup make_q8() {
    // indices: 1,-1,i,-i,j,-j,k,-k ; encode as (symbol, sign)
    // symbol products with result signs: table over {1,i,j,k}
    const int sym[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sgn[4][4] = {{+1, +1, +1, +1},
                           {+1, -1, +1, -1},
                           {+1, -1, -1, +1},
                           {+1, +1, -1, -1}};
    // sym/sgn arranged so that i*j=k, j*k=i, k*i=j, i*i=j*j=k*k=-1
    auto idx = [](int symbol, int sign) { return 2 * symbol + (sign < 0 ? 1 : 0); };
    std::vector<unsigned> mul(64);
    for (int s1 = 0; s1 < 4; ++s1)
        for (int g1 : {+1, -1})
            for (int s2 = 0; s2 < 4; ++s2)
                for (int g2 : {+1, -1}) {
                    int rs = sym[s1][s2];
                    int rg = g1 * g2 * sgn[s1][s2];
                    mul[idx(s1, g1) * 8 + idx(s2, g2)] = idx(rs, rg);
                }
    return FiniteGroup("Q8", 8, mul, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace

const FiniteGroup& c1() {
    static FiniteGroup g = FiniteGroup::cyclic(1, "C1");
    return g;
}
const FiniteGroup& c2() {
    static FiniteGroup g = FiniteGroup::cyclic(2, "C2");
    return g;
}
const FiniteGroup& c3() {
    static FiniteGroup g = FiniteGroup::cyclic(3, "C3");
    return g;
}
const FiniteGroup& c4() {
    static FiniteGroup g = FiniteGroup::cyclic(4, "C4");
    return g;
}
const FiniteGroup& c6() {
    static FiniteGroup g = FiniteGroup::cyclic(6, "C6");
    return g;
}
const FiniteGroup& c2c2() {
    static FiniteGroup g = make_c2c2();
    return g;
}
const FiniteGroup& s3() {
    static FiniteGroup g = FiniteGroup::from_permutations("S3", {{1, 0, 2}, {1, 2, 0}}, 3);
    return g;
}
const FiniteGroup& d4() {
    static FiniteGroup g = make_d4();
    return g;
}
const FiniteGroup& q8() {
    static FiniteGroup g = make_q8();
    return g;
}
const FiniteGroup& a4() {
    static FiniteGroup g =
        FiniteGroup::from_permutations("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}, 4);
    return g;
}

const FiniteGroup& by_name(const std::string& name) {
    if (name == "C1") return c1();
    if (name == "C2") return c2();
    if (name == "C3") return c3();
    if (name == "C4") return c4();
    if (name == "C6") return c6();
    if (name == "C2xC2") return c2c2();
    if (name == "S3") return s3();
    if (name == "D4") return d4();
    if (name == "Q8") return q8();
    if (name == "A4") return a4();
    throw InputError("unknown catalog group: " + name);
}

std::vector<std::string> names() {
    return {"C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "A4"};
}

}  // namespace gring::catalog
