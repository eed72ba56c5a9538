#include "borelwkb/poly.hpp"

#include <algorithm>

namespace borelwkb {

PolyC PolyC::constant(Cplx a, VarTag v) {
    PolyC p;
    p.var = v;
    if (a != 0.0) p.c = {a};
    return p;
}

PolyC PolyC::constant_exact(const Rational& a, VarTag v) {
    PolyC p;
    p.var = v;
    if (a != 0) {
        p.c = {Cplx(to_double(a), 0.0)};
        p.exact = std::vector<Rational>{a};
    } else {
        p.exact = std::vector<Rational>{};
    }
    return p;
}

void PolyC::trim() {
    if (exact) {
        while (!exact->empty() && exact->back() == 0) {
            exact->pop_back();
            c.pop_back();
        }
        if (exact->empty()) c.clear();
    } else {
        while (!c.empty() && c.back() == 0.0) c.pop_back();
    }
}

Cplx PolyC::eval(Cplx x) const {
    Cplx r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

Rational PolyC::eval_exact(const Rational& x) const {
    Rational r = 0;
    if (!exact) return r;
    for (auto it = exact->rbegin(); it != exact->rend(); ++it) r = r * x + *it;
    return r;
}

PolyC PolyC::derivative() const {
    PolyC d;
    d.var = var;
    if (c.size() <= 1) {
        if (exact) d.exact = std::vector<Rational>{};
        return d;
    }
    d.c.resize(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d.c[k - 1] = static_cast<double>(k) * c[k];
    if (exact) {
        std::vector<Rational> e(exact->size() - 1);
        for (std::size_t k = 1; k < exact->size(); ++k) e[k - 1] = Rational(k) * (*exact)[k];
        d.exact = std::move(e);
    }
    d.trim();
    return d;
}

PolyC PolyC::antiderivative() const {
    PolyC a;
    a.var = var;
    if (c.empty()) {
        if (exact) a.exact = std::vector<Rational>{};
        return a;
    }
    a.c.assign(c.size() + 1, Cplx(0.0));
    for (std::size_t k = 0; k < c.size(); ++k) a.c[k + 1] = c[k] / static_cast<double>(k + 1);
    if (exact) {
        std::vector<Rational> e(exact->size() + 1, Rational(0));
        for (std::size_t k = 0; k < exact->size(); ++k) e[k + 1] = (*exact)[k] / Rational(k + 1);
        a.exact = std::move(e);
    }
    return a;
}

PolyC PolyC::reflect() const {
    PolyC r = *this;
    for (std::size_t k = 1; k < r.c.size(); k += 2) r.c[k] = -r.c[k];
    if (r.exact)
        for (std::size_t k = 1; k < r.exact->size(); k += 2) (*r.exact)[k] = -(*r.exact)[k];
    return r;
}

PolyC operator+(const PolyC& a, const PolyC& b) {
    PolyC r;
    r.var = a.c.empty() ? b.var : a.var;
    r.c.assign(std::max(a.c.size(), b.c.size()), Cplx(0.0));
    for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
    if (a.exact && b.exact) {
        std::vector<Rational> e(r.c.size(), Rational(0));
        for (std::size_t k = 0; k < a.exact->size(); ++k) e[k] += (*a.exact)[k];
        for (std::size_t k = 0; k < b.exact->size(); ++k) e[k] += (*b.exact)[k];
        for (std::size_t k = 0; k < e.size(); ++k) r.c[k] = Cplx(to_double(e[k]), 0.0);
        r.exact = std::move(e);
    }
    r.trim();
    return r;
}

PolyC operator-(const PolyC& a, const PolyC& b) {
    return a + b.scaled_exact(Rational(-1));
}

PolyC operator*(const PolyC& a, const PolyC& b) {
    PolyC r;
    r.var = a.var;
    if (a.c.empty() || b.c.empty()) {
        if (a.exact && b.exact) r.exact = std::vector<Rational>{};
        return r;
    }
    r.c.assign(a.c.size() + b.c.size() - 1, Cplx(0.0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    if (a.exact && b.exact) {
        std::vector<Rational> e(r.c.size(), Rational(0));
        for (std::size_t i = 0; i < a.exact->size(); ++i)
            for (std::size_t j = 0; j < b.exact->size(); ++j) e[i + j] += (*a.exact)[i] * (*b.exact)[j];
        for (std::size_t k = 0; k < e.size(); ++k) r.c[k] = Cplx(to_double(e[k]), 0.0);
        r.exact = std::move(e);
    }
    r.trim();
    return r;
}

PolyC PolyC::scaled(Cplx s) const {
    PolyC r;
    r.var = var;
    if (s == 0.0) return r;
    r.c = c;
    for (auto& x : r.c) x *= s;
    if (exact && s.imag() == 0.0) {
        // keep exactness only for exact rational scalars handled elsewhere
    }
    return r;
}

PolyC PolyC::scaled_exact(const Rational& s) const {
    PolyC r;
    r.var = var;
    if (s == 0) {
        if (exact) r.exact = std::vector<Rational>{};
        return r;
    }
    r.c = c;
    const double sd = to_double(s);
    for (auto& x : r.c) x *= sd;
    if (exact) {
        std::vector<Rational> e = *exact;
        for (auto& x : e) x *= s;
        for (std::size_t k = 0; k < e.size(); ++k) r.c[k] = Cplx(to_double(e[k]), 0.0);
        r.exact = std::move(e);
    }
    return r;
}

} // namespace borelwkb
