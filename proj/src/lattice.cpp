#include "torusrep/lattice.hpp"

#include <algorithm>

namespace torusrep {

namespace {

// floor(a / b) for b > 0
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a % b < 0) --q;
    return q;
}

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
    HermiteForm out{m, IntMatrix::identity(m.rows())};
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    const std::size_t rows = h.rows();
    std::size_t r = 0;

    for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
        bool has_pivot = false;
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                if (best == rows || abs_value(h(i, c)) < abs_value(h(best, c))) best = i;
            }
            if (best == rows) break;
            has_pivot = true;
            h.swap_rows(r, best);
            u.swap_rows(r, best);

            bool cleared = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                const Integer q = h(i, c) / h(r, c);
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (!has_pivot) continue;

        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Integer q = floor_div(h(i, c), h(r, c));
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return out;
}

std::vector<Integer> snf(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<Integer> factors;
    factors.reserve(n);

    for (std::size_t t = 0; t < n; ++t) {
        // smallest nonzero entry of the trailing block goes to (t, t)
        std::size_t bi = a.rows(), bj = a.cols();
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j)
                if (a(i, j) != 0 && (bi == a.rows() || abs_value(a(i, j)) < abs_value(a(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == a.rows()) break;
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                a.add_row_multiple(i, t, -(a(i, t) / a(t, t)));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                a.add_col_multiple(j, t, -(a(t, j) / a(t, t)));
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // a nonzero remainder is smaller than the pivot; move it in
                std::size_t pi = t, pj = t;
                for (std::size_t i = t + 1; i < a.rows(); ++i)
                    if (a(i, t) != 0 && abs_value(a(i, t)) < abs_value(a(pi, pj))) {
                        pi = i;
                        pj = t;
                    }
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (a(t, j) != 0 && abs_value(a(t, j)) < abs_value(a(pi, pj))) {
                        pi = t;
                        pj = j;
                    }
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }

            bool divides_all = true;
            for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, Integer(1));
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        factors.push_back(abs_value(a(t, t)));
    }
    factors.resize(n, Integer(0));
    return factors;
}

std::size_t rank(const IntMatrix& m) {
    // row elimination over Z, each touched row divided by its content
    IntMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            const Integer g = gcd(a(r, c), a(i, c));
            const Integer f = a(r, c) / g;
            const Integer h = a(i, c) / g;
            Integer content = 0;
            for (std::size_t j = c; j < a.cols(); ++j) {
                a(i, j) = f * a(i, j) - h * a(r, j);
                content = gcd(content, a(i, j));
            }
            if (content > 1)
                for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) /= content;
        }
        ++r;
    }
    return r;
}

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            a.add_row_multiple(i, r, Rational(-a(i, c) / a(r, c)));
        }
        ++r;
    }
    return r;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix lattice_basis(const IntMatrix& gens) {
    if (gens.rows() == 0) return IntMatrix(0, gens.cols());
    const IntMatrix h = hnf(gens).h;
    std::size_t nonzero = 0;
    while (nonzero < h.rows()) {
        const auto r = h.row(nonzero);
        if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; })) break;
        ++nonzero;
    }
    IntMatrix basis(nonzero, h.cols());
    for (std::size_t i = 0; i < nonzero; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) basis(i, j) = h(i, j);
    return basis;
}

bool in_hnf_lattice(std::span<const Integer> v, const IntMatrix& basis) {
    if (v.size() != basis.cols()) throw std::invalid_argument("vector length does not match lattice dimension");
    IntVector rest(v.begin(), v.end());
    std::size_t r = 0;
    for (std::size_t c = 0; c < rest.size(); ++c) {
        const bool pivot = r < basis.rows() && basis(r, c) != 0;
        if (!pivot) {
            if (rest[c] != 0) return false;
            continue;
        }
        if (rest[c] % basis(r, c) != 0) return false;
        const Integer q = rest[c] / basis(r, c);
        if (q != 0)
            for (std::size_t j = c; j < rest.size(); ++j) rest[j] -= q * basis(r, j);
        ++r;
    }
    return true;
}

bool in_sublattice(std::span<const Integer> v, const IntMatrix& gens) {
    if (v.size() != gens.cols()) throw std::invalid_argument("vector length does not match generator width");
    return in_hnf_lattice(v, lattice_basis(gens));
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    RationalMatrix a = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a(i, c) != 0) a.add_row_multiple(i, r, Rational(-a(i, c)));
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
        RationalVector x(a.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -a(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

IntVector primitive(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    IntVector out(v.begin(), v.end());
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

IntVector primitive_integer_vector(std::span<const Rational> v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    IntVector scaled;
    scaled.reserve(v.size());
    for (const auto& x : v) scaled.push_back(numerator(x) * (l / denominator(x)));
    return primitive(scaled);
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
    return q;
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text) {
    const auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!valid_int(num)) throw std::invalid_argument("malformed rational: " + std::string(text));
    Integer p(std::string(num.front() == '+' ? num.substr(1) : num));
    if (slash == std::string_view::npos) return Rational(p);
    const std::string_view den = text.substr(slash + 1);
    if (!valid_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    Integer q{std::string(den)};
    if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(p, q);
}

}  // namespace torusrep
