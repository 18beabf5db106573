#include "dirackit/poly.hpp"

#include "dirackit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dirackit {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db;
    return a > b;
}

Poly Poly::constant(std::size_t num_vars, const Rational& value) {
    Poly p(num_vars);
    p.add_term(Exponent(num_vars, 0), value);
    return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw DimensionMismatch("variable index out of range");
    Exponent e(num_vars, 0);
    e[index] = 1;
    return monomial(num_vars, std::move(e));
}

Poly Poly::monomial(std::size_t num_vars, Exponent exponent, const Rational& coeff) {
    if (exponent.size() != num_vars) throw DimensionMismatch("exponent length does not match variable count");
    Poly p(num_vars);
    p.add_term(exponent, coeff);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (auto e : terms_.begin()->first) {
        if (e != 0) return false;
    }
    return true;
}

Rational Poly::constant_term() const { return coefficient(Exponent(num_vars_, 0)); }

Rational Poly::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first; // grlex: highest degree first
    return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int Poly::degree_in(std::size_t var) const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, static_cast<int>(e.at(var)));
    return deg;
}

void Poly::add_term(const Exponent& exponent, const Rational& coeff) {
    if (exponent.size() != num_vars_) throw DimensionMismatch("exponent length does not match variable count");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& other) const {
    if (num_vars_ != other.num_vars_) {
        throw DimensionMismatch("polynomials in " + std::to_string(num_vars_) + " and " +
                                std::to_string(other.num_vars_) + " variables");
    }
}

Poly& Poly::operator+=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly out(a.num_vars_);
    Exponent e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= num_vars_) throw DimensionMismatch("derivative variable out of range");
    Poly out(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != num_vars_) throw DimensionMismatch("evaluation point has wrong dimension");
    Rational sum = 0;
    Rational term;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

double Poly::evaluate(std::span<const double> point) const {
    if (point.size() != num_vars_) throw DimensionMismatch("evaluation point has wrong dimension");
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

Poly Poly::compose(std::span<const Poly> subs) const {
    return compose(subs, subs.empty() ? 0 : subs[0].num_vars());
}

Poly Poly::compose(std::span<const Poly> subs, std::size_t target_vars) const {
    if (subs.size() != num_vars_) throw DimensionMismatch("composition needs one substitute per variable");
    for (const auto& s : subs) {
        if (s.num_vars() != target_vars) throw DimensionMismatch("substitutes live in different rings");
    }
    // powers[i][k] = subs[i]^k, filled lazily
    std::vector<std::vector<Poly>> powers(num_vars_);
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(target_vars, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * subs[i]);
        return cache[k];
    };
    Poly out(target_vars);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term = term * power_of(i, e[i]);
        }
        out += term;
    }
    return out;
}

Poly Poly::extend(std::size_t num_vars) const {
    if (num_vars < num_vars_) throw DimensionMismatch("cannot extend to fewer variables");
    Poly out(num_vars);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f.resize(num_vars, 0);
        out.add_term(f, c);
    }
    return out;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i); };
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        bool constant = std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || constant) {
            os << dirackit::to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << name(i);
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

Poly pow(const Poly& base, unsigned exponent) {
    Poly result = Poly::constant(base.num_vars(), 1);
    Poly b = base;
    while (exponent) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent) b *= b;
    }
    return result;
}

} // namespace dirackit
