#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slex/errors.hpp"

namespace slex {

/// Layouts of the five published benchmark tables, kept as data so the CLI
/// can regenerate any of them deterministically.  `decimals` drive the text
/// format, which mimics the per-column digit counts of the originals;
/// machine formats (csv/json) always carry 15 significant digits.
namespace benchmark {

struct rational {
    long num = 0;
    long den = 1;
    std::string label;
};

/// couplings used by the l = 0 tables, in published order
inline const std::vector<rational>& couplings() {
    static const std::vector<rational> v = {
        {1, 100, "1/100"}, {1, 20, "1/20"}, {1, 10, "1/10"}, {1, 5, "1/5"},
        {1, 4, "1/4"},     {1, 3, "1/3"},   {1, 2, "1/2"},   {2, 1, "2"},
    };
    return v;
}

/// Padé row labels in published order: [N,M] = denominator N, numerator M.
inline const std::vector<std::pair<int, int>>& pade_orders() {
    static const std::vector<std::pair<int, int>> v = {
        {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {4, 5},
    };
    return v;
}

struct table_layout {
    int id = 0;
    std::string title;
    /// column parameter: coupling index (tables 1, 3, 5) or l value (2, 4)
    std::vector<int> columns;
    std::vector<int> decimals;     ///< printed decimals per column (text format)
    bool columns_are_l = false;    ///< otherwise indices into couplings()
    int terms = 10;                ///< partial-sum rows K = 1..terms (tables 1, 2)
    bool pade_rows = false;        ///< rows are pade_orders() (tables 3, 4)
    bool summary = false;          ///< table 5 layout: K6 / [3,3] / DNI per coupling
    bool dni_row = false;          ///< append the oracle row (table 1)
};

inline const table_layout& layout(int id) {
    static const std::vector<table_layout> layouts = [] {
        std::vector<table_layout> v;
        {
            table_layout t;
            t.id = 1;
            t.title = "Ground-state energies: K-term partial sums and the integration oracle";
            t.columns = {0, 1, 2, 3, 4, 5, 6, 7};
            t.decimals = {13, 11, 9, 8, 8, 6, 5, 4};
            t.dni_row = true;
            v.push_back(t);
        }
        {
            table_layout t;
            t.id = 2;
            t.title = "Effect of the angular momentum on convergence (coupling 1/2)";
            t.columns = {1, 5, 10, 20};
            t.decimals = {6, 7, 9, 12};
            t.columns_are_l = true;
            v.push_back(t);
        }
        {
            table_layout t;
            t.id = 3;
            t.title = "Resummed energies at l = 0";
            t.columns = {0, 2, 5, 7};
            t.decimals = {13, 8, 5, 4};
            t.pade_rows = true;
            v.push_back(t);
        }
        {
            table_layout t;
            t.id = 4;
            t.title = "Resummed energies at coupling 1/2";
            t.columns = {0, 1, 3, 5, 10, 20};
            t.decimals = {6, 6, 6, 9, 9, 12};
            t.columns_are_l = true;
            t.pade_rows = true;
            v.push_back(t);
        }
        {
            table_layout t;
            t.id = 5;
            t.title = "Six-term sums, [3,3] resummation, and the integration oracle";
            t.columns = {0, 1, 2, 3, 4, 5, 6, 7};
            t.decimals = {13, 11, 11, 9, 9, 9, 9, 6};
            t.summary = true;
            v.push_back(t);
        }
        return v;
    }();
    if (id < 1 || id > static_cast<int>(layouts.size()))
        throw domain_error("benchmark: table id must be 1..5");
    return layouts[static_cast<std::size_t>(id - 1)];
}

}  // namespace benchmark
}  // namespace slex
