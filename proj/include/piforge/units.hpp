#pragma once

#include "piforge/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace piforge {

/// Ordered base-dimension names. Defaults to (M, L, T, Theta); any unique
/// non-empty list works, e.g. the seven SI base dimensions.
struct BaseDimensions {
    std::vector<std::string> names;

    static BaseDimensions mlt_theta();

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool operator==(const BaseDimensions&) const = default;
};

/// Exponents of the base dimensions of one quantity, exact rationals.
struct DimensionVector {
    std::vector<Rat> exponents;

    bool is_zero() const;
    bool operator==(const DimensionVector&) const = default;
};

enum class Role { Parameter, IndependentVariable, Output };

Role role_from_string(const std::string& s);
std::string role_to_string(Role role);

struct QuantityDecl {
    std::string name;
    DimensionVector dims;
    Role role = Role::Parameter;
};

/// Ordered set of quantity declarations over a fixed dimension basis.
/// Inputs (parameters and independent variables) must precede outputs so the
/// units matrix partitions as [D_p, D_q]; names are unique; dimension vector
/// lengths match the basis. Immutable after construction.
class QuantityRegistry {
public:
    QuantityRegistry(BaseDimensions base, std::vector<QuantityDecl> quantities);

    const BaseDimensions& base() const { return base_; }
    const std::vector<QuantityDecl>& quantities() const { return quantities_; }
    std::size_t size() const { return quantities_.size(); }

    const QuantityDecl& at(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const;

    std::size_t input_count() const { return input_count_; }
    std::vector<std::string> names() const;
    std::vector<std::string> input_names() const;
    std::vector<std::string> output_names() const;

private:
    BaseDimensions base_;
    std::vector<QuantityDecl> quantities_;
    std::size_t input_count_ = 0;
};

/// Units matrix D: rows are base dimensions, columns are quantities in
/// declaration order. The first input_cols columns form D_p, the rest D_q.
struct UnitsMatrix {
    std::vector<std::vector<Rat>> rows;
    std::size_t input_cols = 0;

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
    const Rat& at(std::size_t i, std::size_t j) const { return rows[i][j]; }

    /// D_p: the input block (parameters + independent variables).
    UnitsMatrix input_block() const;
    std::vector<Rat> column(std::size_t j) const;
};

/// Exponent vector of a registered quantity, verbatim from its declaration.
DimensionVector omega(const QuantityRegistry& registry, std::string_view name);

UnitsMatrix build_units_matrix(const QuantityRegistry& registry);

/// D_p only: columns are the registry's inputs.
UnitsMatrix build_input_units_matrix(const QuantityRegistry& registry);

/// True iff D * expo == 0 exactly. Length of expo must equal the column
/// count of D.
bool check_homogeneous(const std::vector<Rat>& expo, const UnitsMatrix& D);

/// Float residual ||D * expo||_2 for engine outputs with real exponents.
double homogeneity_residual(const std::vector<double>& expo, const UnitsMatrix& D);

} // namespace piforge
