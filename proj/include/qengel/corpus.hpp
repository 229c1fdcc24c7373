#pragma once

// Group corpus loading: the shipped generator presets (cyclic/dihedral/
// symmetric/alternating permutation families and explicit matrix groups)
// together with their expected structural properties for the regression suite.

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "qengel/group.hpp"

namespace qengel::grp {

struct CorpusEntry {
    std::string name;
    FiniteGroup group;
    bool solvable = false;
    bool nilpotent = false;
};

inline std::vector<CorpusEntry> load_corpus(const std::string& path, std::uint32_t cap = 50000) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<CorpusEntry> out;
    for (auto& g : doc.at("groups")) {
        CorpusEntry e;
        e.name = g.at("name").get<std::string>();
        e.solvable = g.at("solvable").get<bool>();
        e.nilpotent = g.at("nilpotent").get<bool>();
        std::string kind = g.at("kind").get<std::string>();
        if (kind == "cyclic") {
            e.group = cyclic_group(g.at("n").get<unsigned>());
        } else if (kind == "dihedral") {
            e.group = dihedral_group(g.at("n").get<unsigned>());
        } else if (kind == "sym") {
            e.group = symmetric_group(g.at("n").get<unsigned>(), cap);
        } else if (kind == "alt") {
            e.group = alternating_group(g.at("n").get<unsigned>(), cap);
        } else if (kind == "mat") {
            auto F = gf::field_make(g.at("p").get<gf::u64>(), g.at("k").get<unsigned>());
            unsigned dim = g.at("dim").get<unsigned>();
            bool projective = g.at("projective").get<bool>();
            std::vector<GroupMat> gens;
            for (auto& gm : g.at("gens")) {
                std::vector<gf::FieldElement> entries;
                for (auto& row : gm)
                    for (auto& cell : row)
                        entries.push_back(gf::parse_element(F, cell.get<std::string>()));
                gens.push_back(GroupMat{mats::MatrixElement(dim, std::move(entries)), projective}
                                   .canonical());
            }
            e.group = FiniteGroup::generate<GroupMat>(
                gens, cap,
                GroupMat{mats::MatrixElement::identity(dim, F), projective}.canonical());
            if (g.contains("order") && e.group.order() != g.at("order").get<std::uint32_t>())
                throw std::runtime_error("corpus group " + e.name + " has unexpected order");
        } else {
            throw std::runtime_error("corpus: unknown kind " + kind);
        }
        e.group.name = e.name;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace qengel::grp
