#include "dirackit/forms.hpp"

#include "dirackit/errors.hpp"

#include <algorithm>

namespace dirackit {

namespace {

/// Sorts indices in place; returns the permutation sign, or 0 if an index repeats.
int sort_with_sign(std::vector<std::size_t>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i) {
        if (idx[i - 1] == idx[i]) return 0;
    }
    return sign;
}

void require_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                                std::to_string(b));
    }
}

} // namespace

// ---------------------------------------------------------------- VectorField

VectorField::VectorField(std::size_t dim)
  : components_(dim, Poly(dim)) {}

VectorField::VectorField(std::vector<Poly> components)
  : components_(std::move(components)) {
    for (const auto& c : components_) {
        if (c.num_vars() != components_.size()) {
            throw DimensionMismatch("vector field component ring differs from ambient dimension");
        }
    }
}

VectorField VectorField::coordinate(std::size_t dim, std::size_t index) {
    VectorField v(dim);
    v.components_.at(index) = Poly::constant(dim, 1);
    return v;
}

bool VectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly VectorField::apply(const Poly& f) const {
    require_dim(f.num_vars(), dim(), "vector field applied to function");
    Poly out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!components_[i].is_zero()) out += components_[i] * f.derivative(i);
    }
    return out;
}

RationalPoint VectorField::evaluate(std::span<const Rational> point) const {
    RationalPoint out;
    out.reserve(dim());
    for (const auto& c : components_) out.push_back(c.evaluate(point));
    return out;
}

VectorField& VectorField::operator+=(const VectorField& other) {
    require_dim(dim(), other.dim(), "vector field sum");
    for (std::size_t i = 0; i < dim(); ++i) components_[i] += other.components_[i];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
    require_dim(dim(), other.dim(), "vector field difference");
    for (std::size_t i = 0; i < dim(); ++i) components_[i] -= other.components_[i];
    return *this;
}

VectorField operator*(const Poly& f, const VectorField& v) {
    VectorField out = v;
    for (auto& c : out.components_) c = f * c;
    return out;
}

VectorField operator*(const Rational& s, const VectorField& v) {
    VectorField out = v;
    for (auto& c : out.components_) c *= s;
    return out;
}

VectorField VectorField::operator-() const {
    VectorField out = *this;
    for (auto& c : out.components_) c = -c;
    return out;
}

// ---------------------------------------------------------------- KForm

KForm KForm::function(const Poly& f) {
    KForm w(f.num_vars(), 0);
    w.add_term({}, f);
    return w;
}

KForm KForm::basis(std::size_t dim, const std::vector<std::size_t>& indices, const Poly& f) {
    KForm w(dim, indices.size());
    w.add_term(indices, f);
    return w;
}

KForm KForm::one_form(std::vector<Poly> coeffs) {
    KForm w(coeffs.size(), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) w.add_term({i}, coeffs[i]);
    return w;
}

Poly KForm::coefficient(const IndexSet& indices) const {
    auto it = coeffs_.find(indices);
    return it == coeffs_.end() ? Poly(dim_) : it->second;
}

Poly KForm::as_function() const {
    if (degree_ != 0) throw DimensionMismatch("as_function on a form of positive degree");
    return coefficient({});
}

std::vector<Poly> KForm::as_covector() const {
    if (degree_ != 1) throw DimensionMismatch("as_covector needs a 1-form");
    std::vector<Poly> out(dim_, Poly(dim_));
    for (const auto& [idx, f] : coeffs_) out[idx[0]] = f;
    return out;
}

void KForm::add_term(const std::vector<std::size_t>& indices, const Poly& f) {
    if (indices.size() != degree_) throw DimensionMismatch("index count differs from form degree");
    require_dim(f.num_vars(), dim_, "form coefficient");
    for (auto i : indices) {
        if (i >= dim_) throw DimensionMismatch("form index out of range");
    }
    if (f.is_zero()) return;
    std::vector<std::size_t> idx = indices;
    int sign = sort_with_sign(idx);
    if (sign == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(idx, Poly(dim_));
    if (sign > 0) {
        it->second += f;
    } else {
        it->second -= f;
    }
    if (it->second.is_zero()) coeffs_.erase(it);
}

void KForm::check_compatible(const KForm& other) const {
    require_dim(dim_, other.dim_, "form sum");
    if (degree_ != other.degree_) throw DimensionMismatch("sum of forms of different degree");
}

KForm& KForm::operator+=(const KForm& other) {
    check_compatible(other);
    for (const auto& [idx, f] : other.coeffs_) add_term(idx, f);
    return *this;
}

KForm& KForm::operator-=(const KForm& other) {
    check_compatible(other);
    for (const auto& [idx, f] : other.coeffs_) add_term(idx, -f);
    return *this;
}

KForm operator*(const Poly& f, const KForm& w) {
    KForm out(w.dim_, w.degree_);
    for (const auto& [idx, g] : w.coeffs_) out.add_term(idx, f * g);
    return out;
}

KForm operator*(const Rational& s, const KForm& w) {
    KForm out(w.dim_, w.degree_);
    for (const auto& [idx, g] : w.coeffs_) out.add_term(idx, s * g);
    return out;
}

KForm KForm::operator-() const {
    KForm out = *this;
    for (auto& [idx, f] : out.coeffs_) f = -f;
    return out;
}

std::map<IndexSet, Rational> KForm::evaluate(std::span<const Rational> point) const {
    std::map<IndexSet, Rational> out;
    for (const auto& [idx, f] : coeffs_) {
        Rational v = f.evaluate(point);
        if (v != 0) out.emplace(idx, v);
    }
    return out;
}

// ---------------------------------------------------------------- Bivector

Poly Bivector::coefficient(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw DimensionMismatch("bivector index out of range");
    if (i == j) return Poly(dim_);
    auto key = std::minmax(i, j);
    auto it = coeffs_.find({key.first, key.second});
    if (it == coeffs_.end()) return Poly(dim_);
    return i < j ? it->second : -it->second;
}

void Bivector::set(std::size_t i, std::size_t j, const Poly& value) {
    if (i >= dim_ || j >= dim_) throw DimensionMismatch("bivector index out of range");
    require_dim(value.num_vars(), dim_, "bivector coefficient");
    if (i == j) {
        if (!value.is_zero()) throw DimensionMismatch("diagonal bivector coefficient must vanish");
        return;
    }
    Poly v = i < j ? value : -value;
    std::pair<std::size_t, std::size_t> key{std::min(i, j), std::max(i, j)};
    if (v.is_zero()) {
        coeffs_.erase(key);
    } else {
        coeffs_[key] = std::move(v);
    }
}

VectorField Bivector::sharp(const KForm& alpha) const {
    require_dim(alpha.dim(), dim_, "bivector sharp");
    auto a = alpha.as_covector();
    VectorField out(dim_);
    for (const auto& [key, p] : coeffs_) {
        auto [i, j] = key;
        // pi(alpha, .) picks up alpha_i p on d/dx_j and -alpha_j p on d/dx_i.
        out[j] += a[i] * p;
        out[i] -= a[j] * p;
    }
    return out;
}

// ---------------------------------------------------------------- PolyMap

PolyMap::PolyMap(std::size_t source_dim, std::vector<Poly> components)
  : source_dim_(source_dim)
  , components_(std::move(components)) {
    for (const auto& c : components_) {
        require_dim(c.num_vars(), source_dim_, "polynomial map component");
    }
}

PolyMap PolyMap::identity(std::size_t dim) {
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < dim; ++i) comps.push_back(Poly::variable(dim, i));
    return PolyMap(dim, std::move(comps));
}

RationalPoint PolyMap::evaluate(std::span<const Rational> point) const {
    require_dim(point.size(), source_dim_, "polynomial map evaluation");
    RationalPoint out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.evaluate(point));
    return out;
}

std::vector<std::vector<Poly>> PolyMap::jacobian() const {
    std::vector<std::vector<Poly>> jac;
    jac.reserve(components_.size());
    for (const auto& c : components_) {
        std::vector<Poly> row;
        row.reserve(source_dim_);
        for (std::size_t a = 0; a < source_dim_; ++a) row.push_back(c.derivative(a));
        jac.push_back(std::move(row));
    }
    return jac;
}

PolyMap PolyMap::compose(const PolyMap& inner) const {
    require_dim(inner.target_dim(), source_dim_, "polynomial map composition");
    std::vector<Poly> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c.compose(inner.components_, inner.source_dim_));
    return PolyMap(inner.source_dim_, std::move(comps));
}

// ---------------------------------------------------------------- operators

KForm wedge(const KForm& a, const KForm& b) {
    require_dim(a.dim(), b.dim(), "wedge");
    KForm out(a.dim(), a.degree() + b.degree());
    for (const auto& [ia, fa] : a.coeffs()) {
        for (const auto& [ib, fb] : b.coeffs()) {
            std::vector<std::size_t> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add_term(idx, fa * fb);
        }
    }
    return out;
}

KForm exterior_d(const KForm& form) {
    const std::size_t n = form.dim();
    KForm out(n, form.degree() + 1);
    for (const auto& [idx, f] : form.coeffs()) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::binary_search(idx.begin(), idx.end(), j)) continue;
            Poly df = f.derivative(j);
            if (df.is_zero()) continue;
            std::vector<std::size_t> full{j};
            full.insert(full.end(), idx.begin(), idx.end());
            out.add_term(full, df);
        }
    }
    return out;
}

KForm interior_product(const VectorField& x, const KForm& form) {
    require_dim(x.dim(), form.dim(), "interior product");
    if (form.degree() == 0) throw DimensionMismatch("interior product of a 0-form");
    KForm out(form.dim(), form.degree() - 1);
    for (const auto& [idx, f] : form.coeffs()) {
        for (std::size_t s = 0; s < idx.size(); ++s) {
            const Poly& xs = x[idx[s]];
            if (xs.is_zero()) continue;
            std::vector<std::size_t> rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t t = 0; t < idx.size(); ++t) {
                if (t != s) rest.push_back(idx[t]);
            }
            Poly term = xs * f;
            out.add_term(rest, s % 2 == 0 ? term : -term);
        }
    }
    return out;
}

KForm lie_derivative(const VectorField& x, const KForm& form) {
    require_dim(x.dim(), form.dim(), "Lie derivative");
    const std::size_t n = form.dim();
    KForm out(n, form.degree());
    for (const auto& [idx, f] : form.coeffs()) {
        out.add_term(idx, x.apply(f));
        // L_X dx_i = d(X_i)
        for (std::size_t s = 0; s < idx.size(); ++s) {
            for (std::size_t j = 0; j < n; ++j) {
                Poly dxj = x[idx[s]].derivative(j);
                if (dxj.is_zero()) continue;
                std::vector<std::size_t> slot = idx;
                slot[s] = j;
                out.add_term(slot, f * dxj);
            }
        }
    }
    return out;
}

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
    require_dim(x.dim(), y.dim(), "vector field bracket");
    std::vector<Poly> comps;
    comps.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) comps.push_back(x.apply(y[i]) - y.apply(x[i]));
    return VectorField(std::move(comps));
}

KForm pullback(const PolyMap& phi, const KForm& form) {
    require_dim(phi.target_dim(), form.dim(), "pullback");
    const std::size_t m = phi.source_dim();
    auto jac = phi.jacobian();
    std::vector<KForm> dphi;
    dphi.reserve(phi.target_dim());
    for (const auto& row : jac) {
        KForm w(m, 1);
        for (std::size_t a = 0; a < m; ++a) w.add_term({a}, row[a]);
        dphi.push_back(std::move(w));
    }
    KForm out(m, form.degree());
    for (const auto& [idx, f] : form.coeffs()) {
        KForm term = KForm::function(f.compose(phi.components(), m));
        for (auto i : idx) term = wedge(term, dphi[i]);
        out += term;
    }
    return out;
}

Poly contract(const KForm& alpha, const VectorField& x) {
    require_dim(alpha.dim(), x.dim(), "contraction");
    if (alpha.degree() != 1) throw DimensionMismatch("contraction needs a 1-form");
    Poly out(x.dim());
    for (const auto& [idx, f] : alpha.coeffs()) {
        if (!x[idx[0]].is_zero()) out += f * x[idx[0]];
    }
    return out;
}

} // namespace dirackit
