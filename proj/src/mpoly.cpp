#include "monodec/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "monodec/errors.hpp"

namespace monodec {

namespace {

unsigned exps_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0U);
}

} // namespace

MPoly MPoly::constant(std::size_t variables, const Rat& c)
{
    MPoly p(variables);
    p.add_term(Exponents(variables, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t variables, std::size_t var)
{
    if (var >= variables)
        throw ValidationError("variable index out of range");
    Exponents e(variables, 0);
    e[var] = 1;
    return monomial(Rat(1), std::move(e));
}

MPoly MPoly::monomial(const Rat& c, Exponents exps)
{
    MPoly p(exps.size());
    p.add_term(exps, c);
    return p;
}

bool MPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && exps_degree(terms_.begin()->first) == 0);
}

Rat MPoly::constant_term() const
{
    return coeff(Exponents(vars_, 0));
}

Rat MPoly::coeff(const Exponents& exps) const
{
    const auto it = terms_.find(exps);
    return it == terms_.end() ? Rat() : it->second;
}

int MPoly::total_degree() const
{
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, static_cast<int>(exps_degree(e)));
    return deg;
}

int MPoly::degree_in(std::size_t var) const
{
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, static_cast<int>(e.at(var)));
    return deg;
}

void MPoly::add_term(const Exponents& exps, const Rat& c)
{
    if (exps.size() != vars_)
        throw ValidationError("variable-count mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

void MPoly::check_compatible(const MPoly& other) const
{
    if (vars_ != other.vars_)
        throw ValidationError("variable-count mismatch");
}

MPoly& MPoly::operator+=(const MPoly& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rat& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    a.check_compatible(b);
    MPoly out(a.vars_);
    Exponents e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::operator-() const
{
    MPoly out(*this);
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

MPoly MPoly::pow(unsigned exponent) const
{
    MPoly result = constant(vars_, Rat(1));
    MPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

MPoly MPoly::divide_exact(const MPoly& divisor) const
{
    check_compatible(divisor);
    if (divisor.is_zero())
        throw DivisionByZero();
    // Lexicographic order: the largest map key is the leading monomial.
    const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
    MPoly remainder = *this;
    MPoly quotient(vars_);
    while (!remainder.is_zero()) {
        const auto& [re, rc] = *remainder.terms_.rbegin();
        Exponents qe(vars_);
        for (std::size_t v = 0; v < vars_; ++v) {
            if (re[v] < lead_e[v])
                throw ValidationError("divide_exact: divisor does not divide");
            qe[v] = re[v] - lead_e[v];
        }
        const MPoly step = monomial(rc / lead_c, std::move(qe));
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

Rat MPoly::evaluate(const std::vector<Rat>& point) const
{
    if (point.size() != vars_)
        throw ValidationError("variable-count mismatch");
    Rat total;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t v = 0; v < vars_; ++v) {
            if (e[v] != 0)
                term *= point[v].pow(e[v]);
        }
        total += term;
    }
    return total;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const
{
    if (images.size() != vars_)
        throw ValidationError("variable-count mismatch");
    const std::size_t out_vars = images.empty() ? 0 : images.front().variables();
    // Cache of images[v]^k, grown on demand.
    std::vector<std::vector<MPoly>> powers(vars_);
    auto image_pow = [&](std::size_t v, unsigned k) -> const MPoly& {
        auto& cache = powers[v];
        if (cache.empty())
            cache.push_back(constant(out_vars, Rat(1)));
        while (cache.size() <= k)
            cache.push_back(cache.back() * images[v]);
        return cache[k];
    };
    MPoly out(out_vars);
    for (const auto& [e, c] : terms_) {
        MPoly term = constant(out_vars, c);
        for (std::size_t v = 0; v < vars_; ++v) {
            if (e[v] != 0)
                term = term * image_pow(v, e[v]);
        }
        out += term;
    }
    return out;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const
{
    if (names.size() < vars_)
        throw ValidationError("not enough variable names");
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Exponents, Rat>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const unsigned da = exps_degree(a.first);
        const unsigned db = exps_degree(b.first);
        if (da != db)
            return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        const bool negative = c.sign() < 0;
        const Rat mag = negative ? -c : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < vars_; ++v) {
            if (e[v] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names[v];
            if (e[v] > 1)
                mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty())
            os << mag;
        else if (mag.is_one())
            os << mono;
        else
            os << mag << "*" << mono;
    }
    return os.str();
}

MPoly partial_derivative(const MPoly& p, std::size_t var)
{
    if (var >= p.variables())
        throw ValidationError("variable index out of range");
    MPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0)
            continue;
        Exponents de = e;
        --de[var];
        out.add_term(de, c * Rat(static_cast<std::int64_t>(e[var])));
    }
    return out;
}

MPoly determinant(std::vector<std::vector<MPoly>> matrix)
{
    const std::size_t size = matrix.size();
    if (size == 0)
        throw ValidationError("determinant of an empty matrix");
    const std::size_t vars = matrix[0][0].variables();
    for (const auto& row : matrix) {
        if (row.size() != size)
            throw ValidationError("determinant: matrix is not square");
    }
    bool negate = false;
    MPoly previous = MPoly::constant(vars, Rat(1));
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (matrix[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && matrix[swap_row][k].is_zero())
                ++swap_row;
            if (swap_row == size)
                return MPoly(vars);
            std::swap(matrix[k], matrix[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                MPoly cross = matrix[i][j] * matrix[k][k] - matrix[i][k] * matrix[k][j];
                matrix[i][j] = cross.divide_exact(previous);
            }
            matrix[i][k] = MPoly(vars);
        }
        previous = matrix[k][k];
    }
    MPoly det = matrix[size - 1][size - 1];
    return negate ? -det : det;
}

} // namespace monodec
