#include "torusrep/involution.hpp"

#include "torusrep/errors.hpp"
#include "torusrep/split.hpp"
#include "torusrep/strata.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

namespace torusrep {

namespace {

enum class PlaneMap { Identity, Minus, Conj, MinusConj };

// 2x2 block of omega for a plane map
Rational plane_entry(PlaneMap m, std::size_t r, std::size_t c) {
    if (r != c) return 0;
    switch (m) {
        case PlaneMap::Identity: return 1;
        case PlaneMap::Minus: return -1;
        case PlaneMap::Conj: return r == 0 ? 1 : -1;
        case PlaneMap::MinusConj: return r == 0 ? -1 : 1;
    }
    return 0;
}

// omega sends plane `from` onto plane `to` (offsets into V) through m
void place_plane(RationalMatrix& omega, std::size_t from, std::size_t to, PlaneMap m) {
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) omega(to + r, from + c) = plane_entry(m, r, c);
}

PlaneMap base_map(int sign, bool negate) {
    if (sign > 0) return negate ? PlaneMap::Minus : PlaneMap::Identity;
    return negate ? PlaneMap::MinusConj : PlaneMap::Conj;
}

IntVector row_times(std::span<const Integer> theta, const IntMatrix& a) {
    IntVector out(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) out[j] += theta[i] * a(i, j);
    return out;
}

IntMatrix shifted_identity(const IntMatrix& a, int shift) {
    IntMatrix m = a;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += shift;
    return m;
}

bool is_zero_entry(std::int64_t x) { return x == 0; }
bool is_zero_entry(const Integer& x) { return x.is_zero(); }
bool is_zero_entry(const Rational& x) { return x.is_zero(); }

// x == v without materializing v as a rational
bool equals(std::int64_t x, int v) { return x == v; }
bool equals(const Integer& x, int v) { return x == v; }
bool equals(const Rational& x, int v) { return denominator(x) == 1 && numerator(x) == v; }

template <typename T>
bool is_identity(const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (i == c ? !equals(m(i, c), 1) : !is_zero_entry(m(i, c))) return false;
        }
    return m.rows() == m.cols();
}

using SmallMatrix = Matrix<std::int64_t>;

// Machine-integer copy of omega when every entry is -1, 0 or 1 and the
// weights are small. An integral orthogonal matrix is a signed permutation,
// so this covers every integral omega that can pass validation.
std::optional<SmallMatrix> small_integral(const InvolutiveExtension& ext) {
    const RationalMatrix& m = ext.omega;
    for (const auto& w : ext.ws.weights())
        for (const auto& x : w.vector)
            if (abs(x) > (1 << 20)) return std::nullopt;
    if (ext.ws.k() > 8 || m.rows() > 512) return std::nullopt;
    SmallMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m(i, c);
            if (x.is_zero()) continue;
            if (equals(x, 1)) out(i, c) = 1;
            else if (equals(x, -1)) out(i, c) = -1;
            else return std::nullopt;
        }
    return out;
}

// rank over Q with 64-bit row elimination; nullopt on overflow
std::optional<std::size_t> small_rank(SmallMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            const std::int64_t g = std::gcd(a(r, c), a(i, c));
            const std::int64_t f = a(r, c) / g, h = a(i, c) / g;
            std::int64_t content = 0;
            for (std::size_t j = c; j < a.cols(); ++j) {
                std::int64_t x = 0, y = 0;
                if (__builtin_mul_overflow(f, a(i, j), &x) || __builtin_mul_overflow(h, a(r, j), &y) ||
                    __builtin_sub_overflow(x, y, &a(i, j)))
                    return std::nullopt;
                content = std::gcd(content, a(i, j));
            }
            if (content > 1)
                for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) /= content;
        }
        ++r;
    }
    return r;
}

IntVector eigenline(const IntMatrix& a, int eigenvalue) {
    const auto kernel = kernel_basis(to_rational(shifted_identity(a, -eigenvalue)));
    if (kernel.size() != 1) return {};
    return sign_canonical(primitive_integer_vector(kernel.front()));
}

// primitive covector spanning the annihilator of u (k = 2)
IntVector annihilator_line(const IntVector& u) { return sign_canonical(primitive(IntVector{u[1], -u[0]})); }

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::size_t class_dim(const WeightSystem& ws, const std::vector<std::size_t>& classes) {
    std::size_t d = 0;
    for (const auto c : classes) d += 2 * ws.weights()[c].multiplicity;
    return d;
}

}  // namespace

namespace {

template <typename T>
Matrix<T> generator(const WeightSystem& ws, std::span<const Integer> x) {
    const std::size_t n = total_dim(ws);
    Matrix<T> d(n, n);
    for (const auto& comp : ws.components()) {
        const T t = static_cast<T>(dot(comp.weight, x));
        if (t == 0) continue;
        for (std::size_t p = 0; p < comp.multiplicity; ++p) {
            const std::size_t o = comp.coordinate_offset + 2 * p;
            d(o, o + 1) = -t;
            d(o + 1, o) = t;
        }
    }
    return d;
}

template <typename T>
ValidationResult validate_omega(const InvolutiveExtension& ext, const Matrix<T>& omega) {
    const std::size_t k = ext.ws.k();
    if (!is_identity(omega.transpose() * omega)) return {false, "omega^T*omega != I (not orthogonal)"};
    if (!is_identity(omega * omega)) return {false, "omega*omega != I (not an involution)"};
    for (std::size_t j = 0; j < k; ++j) {
        IntVector e(k);
        e[j] = 1;
        IntVector ae(k);
        for (std::size_t i = 0; i < k; ++i) ae[i] = ext.a(i, j);
        const Matrix<T> lhs = omega * generator<T>(ext.ws, e) * omega;
        if (lhs != generator<T>(ext.ws, ae))
            return {false, "compatibility: omega*D(e_" + std::to_string(j) + ")*omega^-1 != D(A*e_" + std::to_string(j) + ")"};
    }
    return {};
}

}  // namespace

RationalMatrix torus_generator(const WeightSystem& ws, std::span<const Integer> x) { return generator<Rational>(ws, x); }

ValidationResult validate(const InvolutiveExtension& ext) {
    const std::size_t k = ext.ws.k();
    const std::size_t n = total_dim(ext.ws);
    if (ext.a.rows() != k || ext.a.cols() != k)
        return {false, "shape: A must be " + std::to_string(k) + "x" + std::to_string(k)};
    if (ext.omega.rows() != n || ext.omega.cols() != n)
        return {false, "shape: omega must be " + std::to_string(n) + "x" + std::to_string(n)};
    if (ext.a * ext.a != IntMatrix::identity(k)) return {false, "A*A != I"};
    if (const auto z = small_integral(ext)) return validate_omega(ext, *z);
    return validate_omega(ext, ext.omega);
}

std::size_t fixed_space_dim(const InvolutiveExtension& ext) {
    const std::size_t n = ext.omega.rows();
    if (const auto z = small_integral(ext))
        if (const auto r = small_rank(*z - SmallMatrix::identity(n))) return n - *r;
    return n - rank(ext.omega - RationalMatrix::identity(n));
}

std::size_t centralizer_dim(const InvolutiveExtension& ext) {
    return ext.ws.k() - rank(shifted_identity(ext.a, -1));
}

bool is_nice_involution(const InvolutiveExtension& ext) {
    if (is_identity(ext.omega)) throw PreconditionError("omega is the identity");
    return fixed_space_dim(ext) + ext.ws.k() - centralizer_dim(ext) + 1 == total_dim(ext.ws);
}

CodimReport codim_bounds_check(const InvolutiveExtension& ext) {
    if (!is_nice_involution(ext)) throw PreconditionError("codimension bounds apply to nice involutions only");
    const std::size_t k = ext.ws.k();
    CodimReport rep;
    rep.codim = total_dim(ext.ws) - fixed_space_dim(ext);
    rep.centralizer_dim = centralizer_dim(ext);
    rep.upper = k + 1;
    if (rep.codim == 1 || rep.centralizer_dim == k)
        throw LemmaViolation(kNoCodimOne, "nice involution with codim V^w = " + std::to_string(rep.codim) +
                                              ", dim Z_G(w) = " + std::to_string(rep.centralizer_dim));
    if (rep.codim < rep.lower || rep.codim > rep.upper)
        throw LemmaViolation(kCodimBounds, "codim V^w = " + std::to_string(rep.codim) + " outside [2, " +
                                               std::to_string(rep.upper) + "]");
    return rep;
}

InvolutionSplit partition_by_involution(const InvolutiveExtension& ext) {
    if (ext.ws.k() != 2) throw PreconditionError("the V+/V-/Vbar split is defined for k = 2");
    const IntVector u_plus = eigenline(ext.a, 1);
    const IntVector u_minus = eigenline(ext.a, -1);
    if (u_plus.empty() || u_minus.empty())
        throw PreconditionError("A must have one-dimensional +1 and -1 eigenspaces (A != +-I)");

    InvolutionSplit s;
    s.line_plus = annihilator_line(u_plus);
    s.line_minus = annihilator_line(u_minus);
    const auto& weights = ext.ws.weights();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (dot(weights[i].vector, u_plus) == 0)
            s.v_plus.push_back(i);
        else if (dot(weights[i].vector, u_minus) == 0)
            s.v_minus.push_back(i);
        else
            s.v_bar.push_back(i);
    }
    s.dim_plus = class_dim(ext.ws, s.v_plus);
    s.dim_minus = class_dim(ext.ws, s.v_minus);
    s.dim_bar = class_dim(ext.ws, s.v_bar);
    return s;
}

InvolutionSplit split_by_involution(const InvolutiveExtension& ext) {
    if (!is_nice_involution(ext)) throw PreconditionError("split requires a nice involution");
    const std::size_t codim = total_dim(ext.ws) - fixed_space_dim(ext);
    if (codim != 2) throw PreconditionError("split requires codim V^w = 2, got " + std::to_string(codim));
    InvolutionSplit s = partition_by_involution(ext);

    const auto fail = [](const std::string& what) { throw LemmaViolation(kCodimTwoSplit, what); };
    if (!s.v_plus.empty()) fail("V+ is not zero");
    if (s.v_bar.size() != 2) fail("Vbar has " + std::to_string(s.v_bar.size()) + " isotypical components, expected 2");

    const auto comps = ext.ws.components();
    const auto& c1 = comps[s.v_bar[0]];
    const auto& c2 = comps[s.v_bar[1]];
    if (c1.real_dim != 2 || c2.real_dim != 2) fail("Vbar components are not 2-dimensional");

    const std::size_t n = total_dim(ext.ws);
    const auto maps_into = [&](const IsotypicalComponent& from, const IsotypicalComponent& to) {
        for (std::size_t c = from.coordinate_offset; c < from.coordinate_offset + from.real_dim; ++c)
            for (std::size_t r = 0; r < n; ++r) {
                const bool inside = r >= to.coordinate_offset && r < to.coordinate_offset + to.real_dim;
                if (!inside && ext.omega(r, c) != 0) return false;
            }
        return true;
    };
    if (!maps_into(c1, c2) || !maps_into(c2, c1)) fail("omega does not interchange the two Vbar components");
    if (sign_canonical(row_times(c1.weight, ext.a)) != c2.weight)
        fail("transpose action of A does not interchange the two Vbar weights");

    for (const auto i : s.v_minus) {
        const auto& c = comps[i];
        for (std::size_t col = c.coordinate_offset; col < c.coordinate_offset + c.real_dim; ++col)
            for (std::size_t r = 0; r < n; ++r)
                if (ext.omega(r, col) != (r == col ? 1 : 0)) fail("omega is not the identity on V-");
    }
    if (induced_lines(ext.ws).count() != 3) fail("the system does not induce exactly 3 lines");
    return s;
}

bool nontriviality_check(const InvolutiveExtension& ext) {
    if (!is_nice_involution(ext)) throw PreconditionError("nontriviality check requires a nice involution");
    if (centralizer_dim(ext) != 0) throw PreconditionError("nontriviality check requires dim Z_G(w) = 0");
    const std::size_t n = total_dim(ext.ws);
    for (const auto& c : ext.ws.components()) {
        bool trivial = true;
        for (std::size_t col = c.coordinate_offset; col < c.coordinate_offset + c.real_dim && trivial; ++col)
            for (std::size_t r = 0; r < n; ++r)
                if (ext.omega(r, col) != (r == col ? 1 : 0)) {
                    trivial = false;
                    break;
                }
        if (trivial) return false;
    }
    return true;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::MaximalCodim: return "chm-k-plus-2";
        case VerdictKind::Chm4: return "chm-4";
        case VerdictKind::Exceptional: return "exceptional";
    }
    return "unknown";
}

CohomogeneityVerdict conclude_cohomogeneity(const InvolutiveExtension& ext) {
    const std::size_t k = ext.ws.k();
    if (k != 1 && k != 2) throw PreconditionError("cohomogeneity conclusion covers k in {1, 2}");
    if (const auto cand = minimal_reduction_candidate(ext.ws); !cand.candidate)
        throw PreconditionError("weight system is not a minimal-reduction candidate");
    if (!is_nice_involution(ext)) throw PreconditionError("omega is not a nice involution");

    const CodimReport rep = codim_bounds_check(ext);
    const std::size_t n = total_dim(ext.ws);
    const std::size_t expected_chm = cohomogeneity(ext.ws);
    CohomogeneityVerdict v;

    if (rep.codim == k + 1) {
        if (!nontriviality_check(ext))
            throw LemmaViolation(kNontrivialOnComponents, "omega is trivial on an isotypical component");
        std::size_t planes = 0;
        for (const auto& w : ext.ws.weights()) planes += w.multiplicity;
        if (planes != k + 1 || n != 2 * k + 2)
            throw LemmaViolation(kMaximalCodimStructure, "expected " + std::to_string(k + 1) +
                                                             " irreducible 2-planes and dim V = " + std::to_string(2 * k + 2) +
                                                             ", got dim V = " + std::to_string(n));
        // for k >= 2 the line bound forces every component to be irreducible
        if (k >= 2 && ext.ws.num_classes() != k + 1)
            throw LemmaViolation(kMaximalCodimStructure, "isotypical components are not all 2-dimensional");
        v.kind = VerdictKind::MaximalCodim;
        v.chm = k + 2;
    } else {
        InvolutionSplit s = split_by_involution(ext);
        v.dim_v_minus = s.dim_minus;
        v.chm = 2 + s.dim_minus;
        v.kind = s.dim_minus == 2 ? VerdictKind::Chm4 : VerdictKind::Exceptional;
        v.split = std::move(s);
    }
    if (v.chm != expected_chm)
        throw LemmaViolation(v.kind == VerdictKind::MaximalCodim ? kMaximalCodimStructure : kCodimTwoSplit,
                             "concluded cohomogeneity " + std::to_string(v.chm) + " differs from " +
                                 std::to_string(expected_chm));
    return v;
}

InvolutiveExtension conjugation_extension(const WeightSystem& ws) {
    const std::size_t k = ws.k();
    const std::size_t n = total_dim(ws);
    InvolutiveExtension ext{ws, IntMatrix(k, k), RationalMatrix(n, n)};
    for (std::size_t i = 0; i < k; ++i) ext.a(i, i) = -1;
    for (std::size_t i = 0; i < ws.fixed_dim(); ++i) ext.omega(i, i) = 1;
    for (const auto& c : ws.components())
        for (std::size_t p = 0; p < c.multiplicity; ++p) {
            const std::size_t o = c.coordinate_offset + 2 * p;
            place_plane(ext.omega, o, o, PlaneMap::Conj);
        }
    return ext;
}

std::optional<std::vector<ClassImage>> class_permutation(const WeightSystem& ws, const IntMatrix& a) {
    const auto& weights = ws.weights();
    std::vector<ClassImage> images;
    for (const auto& w : weights) {
        const IntVector img = row_times(w.vector, a);
        const IntVector canon = sign_canonical(img);
        const auto it = std::find_if(weights.begin(), weights.end(), [&](const Weight& x) { return x.vector == canon; });
        if (it == weights.end() || it->multiplicity != w.multiplicity) return std::nullopt;
        images.push_back({static_cast<std::size_t>(it - weights.begin()), canon == img ? 1 : -1});
    }
    return images;
}

InvolutiveExtension block_swap_extension(const WeightSystem& ws, const IntMatrix& a, std::size_t i, std::size_t j) {
    const auto perm = class_permutation(ws, a);
    if (!perm) throw InputError("A does not permute the weight classes");
    for (std::size_t c = 0; c < perm->size(); ++c) {
        const std::size_t want = c == i ? j : c == j ? i : c;
        if ((*perm)[c].target != want) throw InputError("A does not exchange exactly the requested classes");
    }
    const std::size_t n = total_dim(ws);
    InvolutiveExtension ext{ws, a, RationalMatrix(n, n)};
    for (std::size_t d = 0; d < ws.fixed_dim(); ++d) ext.omega(d, d) = 1;
    const auto comps = ws.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& from = comps[c];
        const auto& to = comps[(*perm)[c].target];
        for (std::size_t p = 0; p < from.multiplicity; ++p)
            place_plane(ext.omega, from.coordinate_offset + 2 * p, to.coordinate_offset + 2 * p,
                        base_map((*perm)[c].sign, false));
    }
    return ext;
}

std::vector<IntMatrix> order_two_matrices(std::size_t k) {
    std::vector<IntMatrix> out;
    const std::size_t cells = k * k;
    std::size_t total = 1;
    for (std::size_t c = 0; c < cells; ++c) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        IntMatrix a(k, k);
        std::size_t rest = code;
        for (std::size_t c = 0; c < cells; ++c) {
            a(c / k, c % k) = static_cast<long>(rest % 3) - 1;
            rest /= 3;
        }
        if (a * a == IntMatrix::identity(k)) out.push_back(std::move(a));
    }
    return out;
}

std::vector<InvolutiveExtension> candidate_involutions(const WeightSystem& ws, const IntMatrix& a) {
    const auto perm = class_permutation(ws, a);
    if (!perm) return {};
    const auto comps = ws.components();
    const std::size_t n = total_dim(ws);

    // one binary choice per sign, one more per reversible self-mapped class
    struct Choice {
        std::size_t cls;
        bool reversal;
    };
    std::vector<Choice> choices;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::size_t t = (*perm)[c].target;
        if (t < c) continue;
        choices.push_back({c, false});
        if (t == c && comps[c].multiplicity >= 2) choices.push_back({c, true});
    }

    std::vector<InvolutiveExtension> out;
    const std::uint64_t patterns = std::uint64_t{1} << choices.size();
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
        std::vector<bool> negate(comps.size(), false), reverse(comps.size(), false);
        for (std::size_t q = 0; q < choices.size(); ++q) {
            if (!(bits >> q & 1U)) continue;
            (choices[q].reversal ? reverse : negate)[choices[q].cls] = true;
        }
        InvolutiveExtension ext{ws, a, RationalMatrix(n, n)};
        for (std::size_t d = 0; d < ws.fixed_dim(); ++d) ext.omega(d, d) = 1;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const std::size_t t = (*perm)[c].target;
            const std::size_t owner = std::min(c, t);
            const PlaneMap m = base_map((*perm)[c].sign, negate[owner]);
            const std::size_t mult = comps[c].multiplicity;
            for (std::size_t p = 0; p < mult; ++p) {
                const std::size_t q = (t == c && reverse[c]) ? mult - 1 - p : p;
                place_plane(ext.omega, comps[c].coordinate_offset + 2 * p, comps[t].coordinate_offset + 2 * q, m);
            }
        }
        if (is_identity(ext.omega)) continue;
        out.push_back(std::move(ext));
    }
    return out;
}

}  // namespace torusrep
