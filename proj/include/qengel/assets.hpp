#pragma once

// Data-asset loading: polynomial system files in transcript notation with a
// `ring <char> (<vars>) <order>` header, CSV tables, and the fixpoint witness
// list.  Assets live under a data directory resolved from (in order) an
// explicit path, the QENGEL_ASSETS environment variable, or the build default.

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qengel/coeff.hpp"
#include "qengel/poly.hpp"

#ifndef QENGEL_DATA_DIR
#define QENGEL_DATA_DIR "data"
#endif

namespace qengel::assets {

inline std::string data_dir(const std::string& override_path = "") {
    if (!override_path.empty()) return override_path;
    if (const char* env = std::getenv("QENGEL_ASSETS")) return env;
    return QENGEL_DATA_DIR;
}

struct SystemFile {
    long characteristic = 0;
    std::vector<std::string> vars;
    std::string order;  // "lp" or "dp"
    // name -> [(i, j, text)] in file order; j = -1 for vector entries
    std::map<std::string, std::vector<std::tuple<int, int, std::string>>> entries;

    poly::MonomialOrder monomial_order() const {
        if (order == "lp") return poly::lex_order();
        if (order == "dp") return poly::degrevlex_order();
        throw std::runtime_error("asset: unknown order " + order);
    }
};

inline SystemFile load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open asset " + path);
    SystemFile sys;
    std::string line;
    bool have_ring = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("ring ", 0) == 0) {
            std::string rest = line.substr(5);
            size_t lp = rest.find('('), rp = rest.find(')');
            if (lp == std::string::npos || rp == std::string::npos)
                throw std::runtime_error("asset: bad ring header in " + path);
            sys.characteristic = std::stol(rest.substr(0, lp));
            std::string vars = rest.substr(lp + 1, rp - lp - 1);
            std::stringstream vs(vars);
            std::string v;
            while (std::getline(vs, v, ',')) {
                while (!v.empty() && isspace((unsigned char)v.front())) v.erase(v.begin());
                while (!v.empty() && isspace((unsigned char)v.back())) v.pop_back();
                sys.vars.push_back(v);
            }
            std::string ord = rest.substr(rp + 1);
            std::stringstream os(ord);
            os >> sys.order;
            have_ring = true;
            continue;
        }
        size_t eq = line.find('=');
        size_t lb = line.find('[');
        size_t rb = line.find(']');
        if (eq == std::string::npos || lb == std::string::npos || rb == std::string::npos || lb > eq)
            throw std::runtime_error("asset: bad entry line in " + path + ": " + line);
        std::string name = line.substr(0, lb);
        std::string idx = line.substr(lb + 1, rb - lb - 1);
        int i, j = -1;
        size_t comma = idx.find(',');
        if (comma == std::string::npos) {
            i = std::stoi(idx);
        } else {
            i = std::stoi(idx.substr(0, comma));
            j = std::stoi(idx.substr(comma + 1));
        }
        sys.entries[name].push_back({i, j, line.substr(eq + 1)});
    }
    if (!have_ring) throw std::runtime_error("asset: missing ring header in " + path);
    return sys;
}

/// Ring over exact rationals (characteristic must be 0).
inline std::unique_ptr<poly::PolyRing<poly::Rat>> ring_rat(const SystemFile& sys) {
    if (sys.characteristic != 0) throw std::runtime_error("asset: expected characteristic 0");
    auto r = std::make_unique<poly::PolyRing<poly::Rat>>();
    r->vars = sys.vars;
    r->ord = sys.monomial_order();
    r->one = poly::Rat(1);
    return r;
}

/// Ring over GF(p).  If the file is a characteristic-0 transcript, any prime
/// may be supplied; a positive file characteristic must match.
inline std::unique_ptr<poly::PolyRing<poly::Fp>> ring_fp(const SystemFile& sys, std::uint64_t p) {
    if (sys.characteristic != 0 && sys.characteristic != (long)p)
        throw std::runtime_error("asset: characteristic mismatch");
    auto r = std::make_unique<poly::PolyRing<poly::Fp>>();
    r->vars = sys.vars;
    r->ord = sys.monomial_order();
    r->one = poly::Fp(1, p);
    return r;
}

template <class K>
std::vector<poly::Polynomial<K>> system_polys(const SystemFile& sys, const std::string& name,
                                              const poly::PolyRing<K>* ring) {
    auto it = sys.entries.find(name);
    if (it == sys.entries.end()) throw std::runtime_error("asset: no system named " + name);
    std::vector<std::pair<int, std::string>> ordered;
    for (auto& [i, j, text] : it->second) {
        if (j != -1) throw std::runtime_error("asset: " + name + " is a matrix, not a vector");
        ordered.push_back({i, text});
    }
    std::sort(ordered.begin(), ordered.end());
    std::vector<poly::Polynomial<K>> out;
    for (auto& [i, text] : ordered) out.push_back(poly::parse_poly(ring, text));
    return out;
}

/// Matrix entries as a rows x cols grid (indices are 1-based in the files).
template <class K>
std::vector<std::vector<poly::Polynomial<K>>> system_matrix(const SystemFile& sys,
                                                            const std::string& name,
                                                            const poly::PolyRing<K>* ring) {
    auto it = sys.entries.find(name);
    if (it == sys.entries.end()) throw std::runtime_error("asset: no system named " + name);
    int rows = 0, cols = 0;
    for (auto& [i, j, text] : it->second) {
        rows = std::max(rows, i);
        cols = std::max(cols, j);
    }
    std::vector<std::vector<poly::Polynomial<K>>> M(
        rows, std::vector<poly::Polynomial<K>>(cols, poly::Polynomial<K>(ring)));
    for (auto& [i, j, text] : it->second) M[i - 1][j - 1] = poly::parse_poly(ring, text);
    return M;
}

// --- CSV tables ---------------------------------------------------------------

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline CsvTable load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table " + path);
    CsvTable t;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            t.header = cells;
            first = false;
        } else {
            t.rows.push_back(cells);
        }
    }
    return t;
}

// --- fixpoint witness file ------------------------------------------------------

struct FixpointWitness {
    unsigned p;                    // field degree: GF(2^p)
    std::string minimal_poly;      // modulus as polynomial in t
    std::map<char, std::string> coords;  // a,b,c,d,v,w,x,y
};

inline std::vector<FixpointWitness> load_fixpoints(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixpoints " + path);
    std::vector<FixpointWitness> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("p=", 0) == 0) {
            FixpointWitness w;
            size_t sp = line.find(' ');
            w.p = (unsigned)std::stoul(line.substr(2, sp - 2));
            size_t mp = line.find("mp=");
            w.minimal_poly = line.substr(mp + 3);
            out.push_back(std::move(w));
        } else {
            size_t eq = line.find('=');
            if (eq != 1 || out.empty()) throw std::runtime_error("bad fixpoint line: " + line);
            out.back().coords[line[0]] = line.substr(eq + 1);
        }
    }
    return out;
}

}  // namespace qengel::assets
