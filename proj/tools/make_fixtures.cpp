// Regenerates the fixture corpus under fixtures/ from the built-in builders.
// Run from the repository root: build/make_fixtures [fixtures_dir]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "gring/catalog.hpp"
#include "gring/io.hpp"
#include "gring/suites.hpp"

using namespace gring;
using nlohmann::json;

namespace {

void write(const std::filesystem::path& path, const json& j) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path root = argc > 1 ? argv[1] : "fixtures";

    std::vector<std::string> names = catalog::names();
    names.insert(names.begin(), "C1");
    for (const auto& name : names) {
        const auto& G = catalog::by_name(name);
        write(root / "groups" / (name + ".json"), io::group_to_json(G));
        auto configs = standard_configs(G);
        for (unsigned c = 0; c < configs.size(); ++c) {
            write(root / "places" / (name + ".cfg" + std::to_string(c) + ".json"),
                  io::places_to_json(configs[c]));
            auto M = decomposition_matrix(configs[c], 2024 + c);
            write(root / "matrices" / (name + ".cfg" + std::to_string(c) + ".json"),
                  io::matrix_to_json(M));
        }
    }

    // quadratic fixture: Q(sqrt 5), S = {inf, 5}, T = {3}
    {
        const auto& C2 = catalog::c2();
        SConfig cfg;
        cfg.G = &C2;
        PlaceDatum inf;
        inf.label = "inf";
        inf.archimedean = true;
        inf.decomp = C2.trivial_subgroup();
        PlaceDatum p5;
        p5.label = "p5";
        p5.decomp = C2.full_subgroup();
        cfg.S = {inf, p5};
        PlaceDatum q3;
        q3.label = "q3";
        q3.decomp = C2.full_subgroup();
        q3.frobenius = 1;
        q3.norm = 3;
        cfg.T = {q3};
        write(root / "places" / "sqrt5.json", io::places_to_json(cfg));

        const double log_eps = 0.4812118250596035;  // log((1+sqrt 5)/2)
        const double log5 = 1.6094379124341003;
        json reg;
        reg["units"] = {"eps", "sqrt5"};
        reg["places"] = {"inf1", "inf2", "w5"};
        reg["logs"] = {{log_eps, -log_eps, 0.0}, {log5 / 2, log5 / 2, -log5}};
        reg["precision"] = 13;
        reg["action"] = json::array({
            json{{"units", {{1, 0}, {0, 1}}}, {"places", {0, 1, 2}}},
            json{{"units", {{-1, 0}, {0, 1}}}, {"places", {1, 0, 2}}},
        });
        reg["above"] = {{"inf", {0, 1}}, {"p5", {2}}};
        write(root / "regulator" / "sqrt5.json", reg);

        json homs;
        homs["homs"] = json::array({json{{"rows", {{1, 0}, {-1, 0}}}},
                                    json{{"rows", {{2, 0}, {-2, 0}}}}});
        homs["phi_tuples"] = json::array({
            json::array({json::array({{1, 0}, {-1, 0}})}),
            json::array({json::array({{2, 1}, {-2, 1}})}),
        });
        write(root / "regulator" / "sqrt5_homs.json", homs);

        // numeric leading terms for the CLI table path: L^1 values at s = 0
        json ltable;
        ltable["chi0"] = {{"order", 1}, {"leading", -log5 / 2}, {"prec", 12}};
        ltable["chi1"] = {{"order", 1}, {"leading", log_eps}, {"prec", 12}};
        write(root / "regulator" / "sqrt5_ltable.json", ltable);
    }
    return 0;
}
