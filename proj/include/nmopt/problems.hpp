#pragma once

#include "nmopt/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nmopt {

enum class SizeClass { Small, Large, Extra };

struct CatalogEntry {
    std::string name;
    int default_n;
    std::vector<std::pair<SizeClass, int>> class_dims;  // membership with per-set dimension
    std::function<Problem(int)> make;
    std::function<bool(int)> valid_n;  // dimension constraint for the family

    bool in_class(SizeClass cls) const {
        for (const auto& [c, n] : class_dims)
            if (c == cls) return true;
        return false;
    }
};

const std::vector<CatalogEntry>& catalog();

/// Problem by name with an optional dimension override. Throws
/// std::invalid_argument for unknown names or invalid dimensions.
Problem get_problem(const std::string& name, std::optional<int> n = {});

/// Names in catalog order; filtered by size class when given.
std::vector<std::string> list_problems(std::optional<SizeClass> filter = {});

/// (name, dimension) rows used by the benchmark sets.
std::vector<std::pair<std::string, int>> bench_rows(SizeClass cls);

}  // namespace nmopt
