#include "piforge/units.hpp"

#include "piforge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace piforge {

BaseDimensions BaseDimensions::mlt_theta() {
    return BaseDimensions{{"M", "L", "T", "Theta"}};
}

std::optional<std::size_t> BaseDimensions::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

bool DimensionVector::is_zero() const {
    return std::all_of(exponents.begin(), exponents.end(),
                       [](const Rat& r) { return r.numerator() == 0; });
}

Role role_from_string(const std::string& s) {
    if (s == "parameter") return Role::Parameter;
    if (s == "independent_variable") return Role::IndependentVariable;
    if (s == "output") return Role::Output;
    throw DataError("unknown role '" + s +
                    "' (expected parameter, independent_variable or output)");
}

std::string role_to_string(Role role) {
    switch (role) {
        case Role::Parameter: return "parameter";
        case Role::IndependentVariable: return "independent_variable";
        case Role::Output: return "output";
    }
    return "?";
}

QuantityRegistry::QuantityRegistry(BaseDimensions base, std::vector<QuantityDecl> quantities)
    : base_(std::move(base)), quantities_(std::move(quantities)) {
    if (base_.names.empty()) throw DataError("base dimension list is empty");
    std::set<std::string> seen_dims(base_.names.begin(), base_.names.end());
    if (seen_dims.size() != base_.names.size())
        throw DataError("base dimension names are not unique");
    if (quantities_.empty()) throw DataError("quantity registry is empty");

    std::set<std::string> seen;
    bool output_seen = false;
    for (const auto& q : quantities_) {
        if (!seen.insert(q.name).second)
            throw DataError("duplicate quantity name '" + q.name + "'");
        if (q.dims.exponents.size() != base_.size())
            throw DataError("quantity '" + q.name + "' has " +
                            std::to_string(q.dims.exponents.size()) +
                            " dimension exponents, expected " + std::to_string(base_.size()));
        if (q.role == Role::Output) {
            output_seen = true;
        } else {
            if (output_seen)
                throw DataError("input quantity '" + q.name +
                                "' declared after an output; declare inputs first");
            ++input_count_;
        }
    }
}

const QuantityDecl& QuantityRegistry::at(std::string_view name) const {
    return quantities_[index_of(name)];
}

std::size_t QuantityRegistry::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < quantities_.size(); ++i)
        if (quantities_[i].name == name) return i;
    throw DataError("unknown quantity '" + std::string(name) + "'");
}

bool QuantityRegistry::contains(std::string_view name) const {
    return std::any_of(quantities_.begin(), quantities_.end(),
                       [&](const QuantityDecl& q) { return q.name == name; });
}

std::vector<std::string> QuantityRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(quantities_.size());
    for (const auto& q : quantities_) out.push_back(q.name);
    return out;
}

std::vector<std::string> QuantityRegistry::input_names() const {
    std::vector<std::string> out;
    for (const auto& q : quantities_)
        if (q.role != Role::Output) out.push_back(q.name);
    return out;
}

std::vector<std::string> QuantityRegistry::output_names() const {
    std::vector<std::string> out;
    for (const auto& q : quantities_)
        if (q.role == Role::Output) out.push_back(q.name);
    return out;
}

UnitsMatrix UnitsMatrix::input_block() const {
    UnitsMatrix out;
    out.input_cols = input_cols;
    out.rows.reserve(rows.size());
    for (const auto& row : rows)
        out.rows.emplace_back(row.begin(), row.begin() + static_cast<long>(input_cols));
    return out;
}

std::vector<Rat> UnitsMatrix::column(std::size_t j) const {
    std::vector<Rat> col;
    col.reserve(rows.size());
    for (const auto& row : rows) col.push_back(row[j]);
    return col;
}

DimensionVector omega(const QuantityRegistry& registry, std::string_view name) {
    return registry.at(name).dims;
}

UnitsMatrix build_units_matrix(const QuantityRegistry& registry) {
    UnitsMatrix D;
    D.input_cols = registry.input_count();
    D.rows.assign(registry.base().size(), std::vector<Rat>(registry.size(), Rat(0)));
    for (std::size_t j = 0; j < registry.size(); ++j) {
        const auto& dims = registry.quantities()[j].dims.exponents;
        for (std::size_t i = 0; i < dims.size(); ++i) D.rows[i][j] = dims[i];
    }
    return D;
}

UnitsMatrix build_input_units_matrix(const QuantityRegistry& registry) {
    return build_units_matrix(registry).input_block();
}

bool check_homogeneous(const std::vector<Rat>& expo, const UnitsMatrix& D) {
    if (expo.size() != D.col_count())
        throw DataError("exponent vector length " + std::to_string(expo.size()) +
                        " does not match units matrix columns " +
                        std::to_string(D.col_count()));
    for (const auto& row : D.rows) {
        Rat acc(0);
        for (std::size_t j = 0; j < expo.size(); ++j) acc += row[j] * expo[j];
        if (acc.numerator() != 0) return false;
    }
    return true;
}

double homogeneity_residual(const std::vector<double>& expo, const UnitsMatrix& D) {
    if (expo.size() != D.col_count())
        throw DataError("exponent vector length does not match units matrix columns");
    double sq = 0.0;
    for (const auto& row : D.rows) {
        double acc = 0.0;
        for (std::size_t j = 0; j < expo.size(); ++j) acc += rat_to_double(row[j]) * expo[j];
        sq += acc * acc;
    }
    return std::sqrt(sq);
}

} // namespace piforge
