#ifndef QGR_SPARSE_POLY_HPP
#define QGR_SPARSE_POLY_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qgr/errors.hpp"
#include "qgr/rational.hpp"

namespace qgr {

// Immutable ordered set of variable names shared by polynomials of one ring.
class VarTable {
  public:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw input_error("empty variable name");
            if (!lookup_.emplace(names_[i], static_cast<int>(i)).second)
                throw input_error("duplicate variable name '" + names_[i] + "'");
        }
    }

    int arity() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> find(const std::string& name) const {
        auto it = lookup_.find(name);
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    bool operator==(const VarTable& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> lookup_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Canonical term order: higher total degree first, ties broken by
// lexicographically larger exponent vector first. Map iteration therefore
// starts at the leading term.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

namespace coeff_traits {

inline bool is_zero(const BigRat& c) { return c == 0; }
inline bool is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
inline bool is_one(const BigRat& c) { return c == 1; }
inline bool is_one(const Complex& c) { return c == Complex(1.0, 0.0); }
inline bool is_negative(const BigRat& c) { return c < 0; }
inline bool is_negative(const Complex& c) { return c.imag() == 0.0 && c.real() < 0.0; }
inline BigRat abs_value(const BigRat& c) { return abs_rat(c); }
inline Complex abs_value(const Complex& c) {
    return (c.imag() == 0.0 && c.real() < 0.0) ? Complex(-c.real(), 0.0) : c;
}
inline std::string render(const BigRat& c) { return to_string(c); }
inline std::string render(const Complex& c) {
    std::ostringstream os;
    os.precision(17);
    if (c.imag() == 0.0) {
        os << c.real();
    } else {
        os << '(' << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    }
    return os.str();
}

}  // namespace coeff_traits

// Sparse multivariate polynomial over a shared variable registry. The
// coefficient type is either BigRat (exact mode) or Complex (floating mode);
// conversion between the modes is explicit. No zero coefficients are stored.
template <class C>
class SparsePoly {
  public:
    using TermMap = std::map<Exponents, C, TermOrder>;

    SparsePoly() = default;
    explicit SparsePoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static SparsePoly constant(VarTablePtr vars, const C& c) {
        SparsePoly p(std::move(vars));
        if (!coeff_traits::is_zero(c)) p.terms_[Exponents(static_cast<size_t>(p.arity()), 0)] = c;
        return p;
    }

    static SparsePoly variable(VarTablePtr vars, int index, const C& c = C(1)) {
        SparsePoly p(vars);
        if (index < 0 || index >= p.arity()) throw input_error("variable index out of range");
        if (!coeff_traits::is_zero(c)) {
            Exponents e(static_cast<size_t>(p.arity()), 0);
            e[static_cast<size_t>(index)] = 1;
            p.terms_[std::move(e)] = c;
        }
        return p;
    }

    static SparsePoly monomial(VarTablePtr vars, Exponents exps, const C& c) {
        SparsePoly p(vars);
        if (static_cast<int>(exps.size()) != p.arity()) throw input_error("exponent vector arity mismatch");
        for (int e : exps)
            if (e < 0) throw input_error("negative exponent");
        if (!coeff_traits::is_zero(c)) p.terms_[std::move(exps)] = c;
        return p;
    }

    const VarTablePtr& vars() const { return vars_; }
    int arity() const { return vars_ ? vars_->arity() : 0; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int degree() const {
        if (terms_.empty()) return -1;
        return total_degree(terms_.begin()->first);
    }

    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
        return d;
    }

    void add_term(const Exponents& exps, const C& c) {
        if (coeff_traits::is_zero(c)) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_.emplace(exps, c);
        } else {
            it->second = C(it->second + c);
            if (coeff_traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    SparsePoly operator+(const SparsePoly& other) const {
        // A default-constructed polynomial is the zero of any ring.
        if (!vars_) return other;
        if (!other.vars_) return *this;
        check_same_ring(other);
        SparsePoly out = *this;
        for (const auto& [e, c] : other.terms_) out.add_term(e, c);
        return out;
    }

    SparsePoly operator-() const {
        SparsePoly out = *this;
        for (auto& [e, c] : out.terms_) c = C(-c);
        return out;
    }

    SparsePoly operator-(const SparsePoly& other) const { return *this + (-other); }

    SparsePoly operator*(const SparsePoly& other) const {
        if (!vars_) return *this;
        if (!other.vars_) return other;
        check_same_ring(other);
        SparsePoly out(vars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : other.terms_) {
                Exponents e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, C(ca * cb));
            }
        }
        return out;
    }

    SparsePoly scale(const C& c) const {
        SparsePoly out(vars_);
        if (coeff_traits::is_zero(c)) return out;
        for (const auto& [e, v] : terms_) out.terms_[e] = C(v * c);
        return out;
    }

    bool operator==(const SparsePoly& other) const {
        return ring_compatible(other) && terms_ == other.terms_;
    }

    SparsePoly derivative(int var) const {
        if (var < 0 || var >= arity()) throw input_error("variable index out of range");
        SparsePoly out(vars_);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<size_t>(var)];
            if (k == 0) continue;
            Exponents d = e;
            --d[static_cast<size_t>(var)];
            out.add_term(d, C(c * C(k)));
        }
        return out;
    }

    // Substitutes polynomials for the listed variables; untouched variables
    // keep their meaning. All replacement polynomials must live in the target
    // ring `target` (which may equal vars()).
    SparsePoly substitute(const std::map<int, SparsePoly>& replacements, VarTablePtr target) const {
        SparsePoly out(target);
        // Identity embedding must be possible for non-replaced variables.
        std::vector<int> embed(static_cast<size_t>(arity()), -1);
        for (int i = 0; i < arity(); ++i) {
            if (replacements.count(i)) continue;
            auto pos = target->find(vars_->name(i));
            if (!pos)
                throw input_error("variable '" + vars_->name(i) + "' missing from substitution target ring");
            embed[static_cast<size_t>(i)] = *pos;
        }
        for (const auto& [e, c] : terms_) {
            SparsePoly term = SparsePoly::constant(target, c);
            for (int i = 0; i < arity(); ++i) {
                int k = e[static_cast<size_t>(i)];
                if (k == 0) continue;
                auto rep = replacements.find(i);
                SparsePoly base = rep != replacements.end()
                                      ? rep->second
                                      : SparsePoly::variable(target, embed[static_cast<size_t>(i)]);
                if (rep != replacements.end() && !(base.vars_ && *base.vars_ == *target))
                    throw input_error("replacement polynomial lives in a different ring");
                for (int j = 0; j < k; ++j) term = term * base;
            }
            out = out + term;
        }
        return out;
    }

    C evaluate(const std::vector<C>& point) const {
        if (static_cast<int>(point.size()) != arity()) throw input_error("evaluation point arity mismatch");
        C acc(0);
        for (const auto& [e, c] : terms_) {
            C term = c;
            for (size_t i = 0; i < e.size(); ++i)
                for (int j = 0; j < e[i]; ++j) term = C(term * point[i]);
            acc = C(acc + term);
        }
        return acc;
    }

    // Canonical rendering; exact mode round-trips through parse().
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            bool neg = coeff_traits::is_negative(c);
            C a = coeff_traits::abs_value(c);
            if (first) {
                if (neg) os << '-';
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            bool has_vars = total_degree(e) > 0;
            bool unit = coeff_traits::is_one(a) && has_vars;
            if (!unit) os << coeff_traits::render(a);
            bool need_star = !unit;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << '*';
                os << vars_->name(static_cast<int>(i));
                if (e[i] > 1) os << '^' << e[i];
                need_star = true;
            }
        }
        return os.str();
    }

  private:
    VarTablePtr vars_;
    TermMap terms_;

    bool ring_compatible(const SparsePoly& other) const {
        if (!vars_ || !other.vars_) return is_zero() || other.is_zero() || (!vars_ && !other.vars_);
        return vars_ == other.vars_ || *vars_ == *other.vars_;
    }

    void check_same_ring(const SparsePoly& other) const {
        if (!ring_compatible(other)) throw input_error("polynomial ring (variable registry) mismatch");
    }
};

using QPoly = SparsePoly<BigRat>;
using CPoly = SparsePoly<Complex>;

// Explicit exact-to-floating conversion.
inline CPoly to_complex(const QPoly& p) {
    CPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, Complex(to_double(c), 0.0));
    return out;
}

// Parses the canonical rendering: terms joined by +/-, each term an optional
// rational coefficient and '*'-separated variable powers. Exact mode only.
QPoly parse_poly(const std::string& text, const VarTablePtr& vars);

}  // namespace qgr

#endif
