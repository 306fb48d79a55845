#include "minicode/witness.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "minicode/parallel.hpp"

namespace minicode {

// ---- lemmas --------------------------------------------------------------------

WitnessBasis full_weight_basis(const Field& field, std::size_t m) {
    const std::uint32_t q = field.q();
    if (m == 0) throw Error("full_weight_basis needs m >= 1");
    if (q == 2 && m < 2) throw Error("full_weight_basis over F_2 needs m >= 2");
    const Scalar one = 1;
    const Scalar minus_one = field.neg(one);
    WitnessBasis out;
    out.kind = WitnessKind::full_weight;

    if (q == 2) {
        // E - A (m even) or E - B, B = 1^T (1 ... 1 0) (m odd).
        for (std::size_t i = 0; i < m; ++i) {
            Vector row(m, 1);
            row[i] = 0;
            if (m % 2 == 1) row[m - 1] = i == m - 1 ? 1 : 0;
            out.vectors.push_back(std::move(row));
        }
    } else {
        const Scalar m_image = field.from_integer(static_cast<std::int64_t>(m));
        Scalar b;
        bool special = false;
        if (q == 3) {
            special = m % 3 == 2;
            b = 2;
        } else {
            b = 2;
            while (b == m_image) ++b;
        }
        // rows of b E - A, with the (1,1) entry lowered by 2 in the special ternary case
        for (std::size_t i = 0; i < m; ++i) {
            Vector row(m, minus_one);
            row[i] = field.sub(b, one);
            if (special && i == 0) row[0] = field.sub(row[0], 2);
            out.vectors.push_back(std::move(row));
        }
    }
    if (rank(field, out.vectors) != m) throw ConstructionError("full_weight_basis produced a singular matrix", false);
    return out;
}

namespace {

std::size_t first_nonzero(const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) return i;
    }
    return v.size();
}

}  // namespace

WitnessBasis unit_inner_basis(const Field& field, const Vector& omega) {
    const std::size_t m = omega.size();
    const std::size_t i0 = first_nonzero(omega);
    if (i0 == m) throw Error("unit_inner_basis needs omega != 0");
    const Scalar inv = field.inv(omega[i0]);
    WitnessBasis out;
    out.kind = WitnessKind::unit_inner;
    out.parameter = omega;
    for (std::size_t i = 0; i < m; ++i) {
        Vector beta(m, 0);
        if (i == i0) {
            beta[i0] = inv;
        } else {
            beta[i] = 1;
            beta[i0] = field.mul(inv, field.sub(1, omega[i]));
        }
        out.vectors.push_back(std::move(beta));
    }
    return out;
}

WitnessBasis hyperplane_low_weight_basis(const Field& field, const Vector& v) {
    const std::size_t m = v.size();
    const std::size_t i0 = first_nonzero(v);
    if (i0 == m) throw Error("hyperplane_low_weight_basis needs v != 0");
    const Scalar inv = field.inv(v[i0]);
    WitnessBasis out;
    out.kind = WitnessKind::hyperplane;
    out.parameter = v;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == i0) continue;
        Vector beta(m, 0);
        beta[i] = 1;
        beta[i0] = field.neg(field.mul(inv, v[i]));
        out.vectors.push_back(std::move(beta));
    }
    return out;
}

std::vector<Vector> linear_system_solutions(const Field& field, const Matrix& a, const Vector& b) {
    const std::vector<Vector> kernel = kernel_basis(field, a);
    if (is_zero(b)) return kernel;
    const auto x0 = particular_solution(field, a, b);
    if (!x0) throw Error("linear system is inconsistent");
    std::vector<Vector> out{*x0};
    for (const auto& k : kernel) out.push_back(add(field, *x0, k));
    // x0 is never in Span(kernel) because A x0 = b != 0, so these are independent.
    if (rank(field, out) != out.size()) throw ConstructionError("solutions are dependent", false);
    return out;
}

// ---- theorem constructions -----------------------------------------------------

namespace {

struct Context {
    const FunctionSpec& f;
    const Field& field;
    std::size_t m;
    std::uint32_t q;
    std::vector<Scalar> table;

    Scalar eval(const Vector& x) const { return table[index_of(q, x)]; }
};

Vector concat(const Vector& a, const Vector& b) {
    Vector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Vector lift(const Context& ctx, const Vector& x) {
    Vector d;
    d.reserve(ctx.m + 1);
    d.push_back(ctx.eval(x));
    d.insert(d.end(), x.begin(), x.end());
    return d;
}

/// All solutions promised by the linear-system lemma for the single equation row . x = rhs.
std::vector<Vector> solve_all(const Field& field, const Vector& row, Scalar rhs) {
    return linear_system_solutions(field, Matrix(row.size(), {row}), Vector{rhs});
}

/// The smallest-index solution of a system the proof asserts is solvable.
Vector solve_one(const Field& field, const std::vector<Vector>& rows, const Vector& rhs, const std::string& step) {
    auto x = particular_solution(field, Matrix(rows.front().size(), rows), rhs);
    if (!x) throw ConstructionError("no solution for " + step, true);
    return *x;
}

bool proportional(const Field& field, const Vector& a, const Vector& b) {
    return rank(field, std::vector<Vector>{a, b}) < 2;
}

// -- first construction: low-weight nonzero / full-weight zero -------------------

std::vector<Vector> low_weight_hyperplane(const Context& ctx, const Vector& v, std::size_t& i0) {
    // alpha_i = e_i - v_i v_{i0}^{-1} e_{i0} at position i; position i0 left for the caller.
    i0 = first_nonzero(v);
    const Scalar inv = ctx.field.inv(v[i0]);
    std::vector<Vector> alpha(ctx.m, Vector(ctx.m, 0));
    for (std::size_t i = 0; i < ctx.m; ++i) {
        if (i == i0) continue;
        alpha[i][i] = 1;
        alpha[i][i0] = ctx.field.neg(ctx.field.mul(v[i], inv));
    }
    return alpha;
}

std::vector<Vector> theorem_a1(const Context& ctx, Scalar u, const Vector& v, std::string& branch) {
    const Field& F = ctx.field;
    if (is_zero(v)) {
        branch = "case u != 0, v = 0: full-weight basis";
        return full_weight_basis(F, ctx.m).vectors;
    }
    if (u != 0) {
        branch = "case u != 0, v != 0: alpha_i = f(beta_i) beta_i";
        const Vector omega = scale(F, F.neg(F.inv(u)), v);
        std::vector<Vector> out;
        for (const auto& beta : unit_inner_basis(F, omega).vectors) out.push_back(scale(F, ctx.eval(beta), beta));
        return out;
    }
    branch = "case u = 0, v != 0: hyperplane basis plus a * alpha_1";
    std::vector<Vector> out = hyperplane_low_weight_basis(F, v).vectors;
    out.push_back(scale(F, 2, out.front()));  // 2 is the smallest element outside {0, 1}
    return out;
}

std::vector<Vector> theorem_a2(const Context& ctx, Scalar u, const Vector& v, std::string& branch) {
    const Field& F = ctx.field;
    if (is_zero(v)) {
        branch = ctx.m % 2 == 0 ? "case u != 0, v = 0: E - A" : "case u != 0, v = 0: E - B";
        return full_weight_basis(F, ctx.m).vectors;
    }
    if (u != 0) {
        branch = "case u != 0, v != 0: unit inner-product basis";
        const Vector omega = scale(F, F.neg(F.inv(u)), v);
        return unit_inner_basis(F, omega).vectors;
    }
    std::size_t i0;
    std::vector<Vector> alpha = low_weight_hyperplane(ctx, v, i0);
    std::size_t skip = ctx.m;
    if (ctx.m % 2 == 1) {
        skip = i0 == 0 ? 1 : 0;
        branch = "case u = 0, v != 0, m odd: alpha_i0 = sum over i != i0, i1";
    } else {
        branch = "case u = 0, v != 0, m even: alpha_i0 = sum over i != i0";
    }
    for (std::size_t i = 0; i < ctx.m; ++i) {
        if (i != i0 && i != skip) alpha[i0] = add(F, alpha[i0], alpha[i]);
    }
    return alpha;
}

// -- second construction: low-weight zero / high-weight nonzero -------------------

std::vector<Vector> theorem_b(const Context& ctx, Scalar u, const Vector& v, std::string& branch) {
    const Field& F = ctx.field;
    const std::size_t m = ctx.m;
    if (is_zero(v)) {
        branch = "case u != 0, v = 0: standard basis";
        std::vector<Vector> out;
        for (std::size_t i = 1; i <= m; ++i) out.push_back(unit_vector(m, i));
        return out;
    }
    std::size_t i0;
    if (u != 0) {
        branch = "case u != 0, v != 0: alpha_i0 = f(beta_i0) beta_i0";
        const Vector omega = scale(F, F.neg(F.inv(u)), v);
        std::vector<Vector> alpha = low_weight_hyperplane(ctx, omega, i0);
        Vector beta(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (i != i0) beta = add(F, beta, alpha[i]);
        }
        beta[i0] = F.add(beta[i0], F.inv(omega[i0]));
        alpha[i0] = scale(F, ctx.eval(beta), beta);
        return alpha;
    }
    branch = "case u = 0, v != 0: alpha_i0 = sum over i != i0";
    std::vector<Vector> alpha = low_weight_hyperplane(ctx, v, i0);
    for (std::size_t i = 0; i < m; ++i) {
        if (i != i0) alpha[i0] = add(F, alpha[i0], alpha[i]);
    }
    return alpha;
}

// -- Maiorana-McFarland ----------------------------------------------------------

struct MMView {
    const Field& F;
    const MaioranaMcFarland& mm;
    std::uint32_t q;
    Scalar c;  // the constant value of g

    const Vector& phi(const Vector& beta) const { return mm.phi[index_of(q, beta)]; }
    Vector phi_minus(const Vector& beta, const Vector& w2) const { return sub(F, phi(beta), w2); }
    Vector e_s(std::size_t i, Scalar a = 1) const {
        Vector e(mm.s, 0);
        e[i] = a;
        return e;
    }
    Vector zero_s() const { return Vector(mm.s, 0); }
    Vector zero_t() const { return Vector(mm.t, 0); }
};

struct MMResult {
    std::vector<Vector> alphas;
    bool needs_fill = false;  // the proof's last vector is (0, 0), outside D_f
};

// Case u != 0, v = 0 (shared by both Maiorana-McFarland theorems).
std::vector<Vector> mm_zero_v(const MMView& mv) {
    const Field& F = mv.F;
    std::vector<Vector> out;
    for (const auto& g : solve_all(F, mv.phi(mv.zero_s()), F.neg(mv.c))) out.push_back(concat(mv.zero_s(), g));
    for (std::size_t i = 0; i < mv.mm.s; ++i) {
        const Vector e = mv.e_s(i);
        out.push_back(concat(e, solve_one(F, {mv.phi(e)}, {F.neg(mv.c)}, "phi(e_i) . gamma = -g(e_i)")));
    }
    return out;
}

// Case u = 0, v != 0 (shared).  The final vector is (0, 0) in the proof.
MMResult mm_zero_u(const MMView& mv, const Vector& v, std::string& branch) {
    const Field& F = mv.F;
    const std::size_t s = mv.mm.s, t = mv.mm.t;
    const Vector v1(v.begin(), v.begin() + s), v2(v.begin() + s, v.end());
    MMResult r;
    if (!is_zero(v2)) {
        branch = "case u = 0, v2 != 0";
        for (const auto& g : solve_all(F, v2, 0)) r.alphas.push_back(concat(mv.zero_s(), g));
        for (std::size_t i = 0; i < s; ++i) {
            r.alphas.push_back(
                concat(mv.e_s(i), solve_one(F, {v2}, {F.neg(v1[i])}, "v2 . gamma = -v1 . e_i")));
        }
    } else {
        branch = "case u = 0, v2 = 0";
        for (const auto& b : solve_all(F, v1, 0)) r.alphas.push_back(concat(b, mv.zero_t()));
        for (std::size_t j = 1; j <= t; ++j) r.alphas.push_back(concat(mv.zero_s(), unit_vector(t, j)));
    }
    r.needs_fill = true;
    return r;
}

std::vector<Vector> theorem_c1_both(const MMView& mv, const Vector& omega, std::string& branch) {
    const Field& F = mv.F;
    const std::size_t s = mv.mm.s;
    const Vector w1(omega.begin(), omega.begin() + s), w2(omega.begin() + s, omega.end());
    const Scalar c = mv.c;
    std::vector<Vector> out;

    if (!is_zero(w1)) {
        branch = "case u, v != 0, omega1 != 0";
        for (const auto& b : solve_all(F, w1, c)) out.push_back(concat(b, mv.zero_t()));
        Scalar a = 0;
        while (a < mv.q && (mv.phi(mv.e_s(0, a)) == w2 || F.mul(a, w1[0]) == c)) ++a;
        if (a == mv.q) throw ConstructionError("no a with phi(a e_1) != omega2 and omega1 . a e_1 != c", true);
        const Vector ae1 = mv.e_s(0, a);
        for (const auto& g : solve_all(F, mv.phi_minus(ae1, w2), F.sub(F.mul(a, w1[0]), c))) {
            out.push_back(concat(ae1, g));
        }
        return out;
    }

    if (mv.phi(mv.zero_s()) != w2) {
        branch = "case u, v != 0, omega1 = 0, phi(0) != omega2";
        for (const auto& g : solve_all(F, mv.phi_minus(mv.zero_s(), w2), F.neg(c))) {
            out.push_back(concat(mv.zero_s(), g));
        }
        for (std::size_t i = 0; i < s; ++i) {
            Scalar a = 1;
            while (a < mv.q && mv.phi(mv.e_s(i, a)) == w2) ++a;
            if (a == mv.q) throw ConstructionError("no a_i with phi(a_i e_i) != omega2", true);
            const Vector ae = mv.e_s(i, a);
            out.push_back(concat(ae, solve_one(F, {mv.phi_minus(ae, w2)}, {F.neg(c)}, "(phi(a_i e_i) - omega2) . gamma = -c")));
        }
        return out;
    }

    const Vector e1 = mv.e_s(0);
    const Vector p1 = mv.phi_minus(e1, w2);
    for (const auto& g : solve_all(F, p1, F.neg(c))) out.push_back(concat(e1, g));
    std::vector<Vector> gamma(s);
    for (std::size_t i = 1; i < s; ++i) {
        const Vector e = mv.e_s(i);
        gamma[i] = solve_one(F, {mv.phi_minus(e, w2)}, {F.neg(c)}, "(phi(e_i) - omega2) . gamma = -c");
        out.push_back(concat(e, gamma[i]));
    }
    for (Scalar a = 1; a < mv.q; ++a) {
        const Vector pa = mv.phi_minus(mv.e_s(0, a), w2);
        if (proportional(F, pa, p1)) continue;
        branch = "case u, v != 0, omega1 = 0, phi(0) = omega2, phi(a e_1) - omega2 outside F_q (phi(e_1) - omega2)";
        Scalar r = 0;
        while (r == F.neg(F.mul(a, c))) ++r;
        out.push_back(concat(mv.e_s(0, a), solve_one(F, {pa, p1}, {F.neg(c), r}, "system for gamma_0")));
        return out;
    }
    branch = "case u, v != 0, omega1 = 0, phi(0) = omega2, every phi(a e_1) - omega2 in F_q (phi(e_1) - omega2)";
    const Vector eta = solve_one(F, {mv.phi_minus(mv.e_s(1), w2), p1}, {0, 1}, "system for eta (needs phi(e_2) - omega2 outside F_q (phi(e_1) - omega2))");
    out.push_back(concat(mv.e_s(1), add(F, gamma[1], eta)));
    return out;
}

std::vector<Vector> theorem_c2_both(const MMView& mv, const Vector& omega, std::string& branch) {
    const Field& F = mv.F;
    const std::size_t s = mv.mm.s;
    const Vector w1(omega.begin(), omega.begin() + s), w2(omega.begin() + s, omega.end());
    std::vector<Vector> out;
    const Vector e1 = mv.e_s(0), e2 = mv.e_s(1);

    if (!is_zero(w1)) {
        for (const auto& b : solve_all(F, w1, 1)) out.push_back(concat(b, mv.zero_t()));
        if (mv.phi(mv.zero_s()) != w2) {
            branch = "case u, v != 0, omega1 != 0, (1) phi(0) != omega2";
            for (const auto& g : solve_all(F, mv.phi_minus(mv.zero_s(), w2), 1)) out.push_back(concat(mv.zero_s(), g));
        } else if (F.sub(w1[0], 1) != 0) {
            branch = "case u, v != 0, omega1 != 0, (2) phi(0) = omega2, omega1 . e_1 != 1";
            for (const auto& g : solve_all(F, mv.phi_minus(e1, w2), F.sub(w1[0], 1))) out.push_back(concat(e1, g));
        } else {
            branch = "case u, v != 0, omega1 != 0, (3) phi(0) = omega2, omega1 . e_1 = 1";
            const Vector p1 = mv.phi_minus(e1, w2);
            for (const auto& g : solve_all(F, p1, 0)) out.push_back(concat(e1, g));
            out.push_back(concat(e2, solve_one(F, {p1, mv.phi_minus(e2, w2)}, {1, F.sub(w1[1], 1)}, "system for gamma'")));
        }
        return out;
    }

    if (mv.phi(mv.zero_s()) != w2) {
        branch = "case u, v != 0, omega1 = 0, phi(0) != omega2";
        for (const auto& g : solve_all(F, mv.phi_minus(mv.zero_s(), w2), 1)) out.push_back(concat(mv.zero_s(), g));
        std::size_t i0 = 0;
        while (i0 < s && mv.phi(mv.e_s(i0)) == w2) ++i0;
        if (i0 == s) throw ConstructionError("no e_i0 with phi(e_i0) != omega2", true);
        for (std::size_t i = 0; i < s; ++i) {
            Vector beta = mv.e_s(i0);
            if (i != i0) beta[i] = 1;
            out.push_back(concat(beta, solve_one(F, {mv.phi_minus(beta, w2)}, {1}, "(phi(beta_i) - omega2) . gamma = 1")));
        }
        return out;
    }

    branch = "case u, v != 0, omega1 = 0, phi(0) = omega2";
    const Vector p1 = mv.phi_minus(e1, w2);
    for (const auto& g : solve_all(F, p1, 1)) out.push_back(concat(e1, g));
    std::vector<Vector> gamma(s);
    for (std::size_t i = 1; i < s; ++i) {
        const Vector e = mv.e_s(i);
        gamma[i] = solve_one(F, {mv.phi_minus(e, w2)}, {1}, "(phi(e_i) - omega2) . gamma = 1");
        out.push_back(concat(e, gamma[i]));
    }
    const Vector eta = solve_one(F, {mv.phi_minus(e2, w2), p1}, {0, 1}, "system for eta");
    out.push_back(concat(e2, add(F, gamma[1], eta)));
    return out;
}

MMResult theorem_c(const Context& ctx, TheoremId thm, Scalar u, const Vector& v, std::string& branch) {
    const auto& mm = std::get<MaioranaMcFarland>(ctx.f.variant());
    const MMView mv{ctx.field, mm, ctx.q, mm.g.front()};
    if (is_zero(v)) {
        branch = "case u != 0, v = 0";
        return {mm_zero_v(mv), false};
    }
    if (u == 0) return mm_zero_u(mv, v, branch);
    const Vector omega = scale(ctx.field, ctx.field.neg(ctx.field.inv(u)), v);
    return {thm == TheoremId::C1 ? theorem_c1_both(mv, omega, branch) : theorem_c2_both(mv, omega, branch), false};
}

// -- monomial sums ----------------------------------------------------------------

std::vector<Vector> theorem_d(const Context& ctx, TheoremId thm, Scalar u, const Vector& v, std::string& branch) {
    const Field& F = ctx.field;
    const std::size_t m = ctx.m;
    const auto& terms = std::get<MonomialSum>(ctx.f.variant()).terms;
    if (is_zero(v)) {
        branch = "case u != 0, v = 0: standard basis";
        std::vector<Vector> out;
        for (std::size_t i = 1; i <= m; ++i) out.push_back(unit_vector(m, i));
        return out;
    }
    const Vector w = u == 0 ? v : scale(F, F.neg(F.inv(u)), v);
    std::size_t i0;
    std::vector<Vector> alpha = low_weight_hyperplane(ctx, w, i0);

    std::vector<std::vector<std::size_t>> supp;  // 0-based
    for (const auto& g : terms) {
        std::vector<std::size_t> s;
        for (auto i : monomial_support(g.exponents)) s.push_back(i - 1);
        supp.push_back(std::move(s));
    }
    auto contains = [](const std::vector<std::size_t>& s, std::size_t i) {
        return std::find(s.begin(), s.end(), i) != s.end();
    };
    std::size_t j1 = 0;
    while (j1 < supp.size() && contains(supp[j1], i0)) ++j1;
    const Scalar a_j1 = terms[j1].coefficient;

    Vector special(m, 0);
    for (std::size_t i : supp[j1]) special = add(F, special, alpha[i]);
    if (u == 0) {
        branch = "case u = 0, v != 0: alpha_i0 = sum over s(g_j1)";
        alpha[i0] = special;
        return alpha;
    }
    special[i0] = F.add(special[i0], F.mul(a_j1, F.inv(w[i0])));
    alpha[i0] = special;

    std::size_t i1 = m;
    if (thm == TheoremId::D2) {
        for (std::size_t i = 0; i < m && i1 == m; ++i) {
            if (i != i0 && ctx.eval(alpha[i]) != 0) i1 = i;
        }
    }
    if (i1 == m) {
        branch = "case u, v != 0: alpha_i0 = sum over s(g_j1) + a_j1 w_i0^-1 e_i0";
        return alpha;
    }
    std::size_t j0 = 0;
    while (j0 < supp.size() && !(contains(supp[j0], i0) && contains(supp[j0], i1))) ++j0;
    if (j0 == supp.size()) throw ConstructionError("no monomial with support {i0, i1}", true);
    std::size_t i2 = m;
    for (std::size_t i : supp[j1]) {
        if (w[i] != 0) {
            i2 = i;
            break;
        }
    }
    Vector beta;
    if (i2 != m) {
        branch = "case u, v != 0, f(alpha_i1) != 0, (a) w_i2 != 0";
        beta = alpha[i1];
        axpy(F, F.neg(F.mul(F.inv(w[i2]), w[i1])), alpha[i2], beta);
    } else {
        branch = "case u, v != 0, f(alpha_i1) != 0, (b) w = 0 on s(g_j1)";
        i2 = supp[j1].front();
        const Scalar k_i2 =
            F.mul(F.mul(F.inv(a_j1), terms[j0].coefficient), F.mul(w[i1], F.inv(w[i0])));
        beta = alpha[i1];
        for (std::size_t i : supp[j1]) axpy(F, i == i2 ? k_i2 : Scalar{1}, alpha[i], beta);
    }
    alpha[i1] = beta;
    return alpha;
}

// -- dispatch and post-conditions ------------------------------------------------

// The first nonzero x in H(v), canonical order, whose lift is outside Span(lifts).
Vector fill_from_hyperplane(const Context& ctx, const std::vector<Vector>& alphas, const Vector& v) {
    RowEchelon ech(ctx.field, ctx.m + 1);
    for (const auto& a : alphas) ech.insert(lift(ctx, a));
    Vector x(ctx.m, 0);
    while (next_vector(ctx.q, x)) {
        if (dot(ctx.field, v, x) == 0 && !ech.in_span(lift(ctx, x))) return x;
    }
    throw ConstructionError("no point of H(v) extends the basis; the codeword is not minimal", true);
}

void check_post(const Context& ctx, TheoremId thm, Scalar u, const Vector& v, const WitnessBasis& w) {
    const Field& F = ctx.field;
    auto fail = [&](const std::string& why) {
        throw ConstructionError(std::string(to_string(thm)) + " construction (" + w.branch + "): " + why, true);
    };
    if (w.vectors.size() != ctx.m) fail("expected " + std::to_string(ctx.m) + " vectors, got " + std::to_string(w.vectors.size()));
    RowEchelon ech(F, ctx.m + 1);
    for (const auto& a : w.vectors) {
        if (a.size() != ctx.m) fail("vector of wrong length");
        if (is_zero(a)) fail("the zero vector is not a member of D_f");
        if (F.add(F.mul(u, ctx.eval(a)), dot(F, v, a)) != 0) fail("a lifted vector is not orthogonal to (u, v)");
        ech.insert(lift(ctx, a));
    }
    if (ech.rank() != ctx.m) fail("lifted vectors have rank " + std::to_string(ech.rank()) + " < m");
}

WitnessBasis construct(const Context& ctx, TheoremId thm, Scalar u, const Vector& v) {
    WitnessBasis w;
    w.kind = WitnessKind::theorem_case;
    w.theorem = thm;
    w.u = u;
    w.v = v;
    switch (thm) {
        case TheoremId::A1: w.vectors = theorem_a1(ctx, u, v, w.branch); break;
        case TheoremId::A2: w.vectors = theorem_a2(ctx, u, v, w.branch); break;
        case TheoremId::B: w.vectors = theorem_b(ctx, u, v, w.branch); break;
        case TheoremId::C1:
        case TheoremId::C2: {
            MMResult r = theorem_c(ctx, thm, u, v, w.branch);
            w.vectors = std::move(r.alphas);
            if (r.needs_fill) {
                w.vectors.push_back(fill_from_hyperplane(ctx, w.vectors, v));
                w.gap_note =
                    "the proof's final vector (0, 0) is not in D_f; replaced by the first point of H(v) "
                    "whose lift is independent";
            }
            break;
        }
        case TheoremId::D1:
        case TheoremId::D2: w.vectors = theorem_d(ctx, thm, u, v, w.branch); break;
    }
    check_post(ctx, thm, u, v, w);
    return w;
}

Context make_context(const FunctionSpec& f) {
    Context ctx{f, f.field(), f.arity(), f.field().q(), {}};
    const FunctionSpec table = f.materialize();
    ctx.table = std::get<TableFunction>(table.variant()).values;
    return ctx;
}

void require_hypotheses(const FunctionSpec& f, TheoremId thm) {
    const HypothesisResult h = validate_hypotheses(f, thm);
    if (!h) throw Error(std::string("hypotheses of ") + std::string(to_string(thm)) + " fail: " + h.condition);
}

}  // namespace

WitnessBasis theorem_witness(TheoremId thm, const FunctionSpec& f, Scalar u, const Vector& v) {
    if (v.size() != f.arity()) throw Error("v must have length m");
    if (u == 0 && is_zero(v)) throw Error("(u, v) must be nonzero");
    require_hypotheses(f, thm);
    return construct(make_context(f), thm, u, v);
}

WitnessSweep theorem_witness_sweep(TheoremId thm, const FunctionSpec& f, unsigned jobs) {
    require_hypotheses(f, thm);
    const Context ctx = make_context(f);
    const std::size_t k = ctx.m + 1;
    const std::uint64_t classes = projective_class_count(ctx.q, k);

    WitnessSweep sweep;
    sweep.classes = classes;
    sweep.certificate.q = ctx.q;
    sweep.certificate.n = static_cast<std::size_t>(space_size(ctx.q, ctx.m) - 1);
    sweep.certificate.k = k;
    sweep.certificate.class_count = classes;
    sweep.certificate.entries.resize(classes);

    std::mutex mu;
    std::set<std::string> notes;
    std::optional<std::pair<std::uint64_t, std::string>> failure;
    const std::uint64_t chunk = 64;
    parallel_chunks((classes + chunk - 1) / chunk, jobs, [&](std::uint64_t c, unsigned) {
        for (std::uint64_t o = c * chunk; o < std::min(classes, (c + 1) * chunk); ++o) {
            const Vector y = projective_representative(ctx.q, k, o);
            const Vector v(y.begin() + 1, y.end());
            try {
                WitnessBasis w = construct(ctx, thm, y[0], v);
                auto& entry = sweep.certificate.entries[o];
                entry.representative = y;
                for (const auto& a : w.vectors) entry.member_vectors.push_back(lift(ctx, a));
                if (w.gap_note) {
                    std::lock_guard lock(mu);
                    ++sweep.gap_filled;
                    notes.insert(*w.gap_note);
                }
            } catch (const ConstructionError& e) {
                std::lock_guard lock(mu);
                if (!failure || o < failure->first) failure = {o, e.what()};
            }
        }
    });
    if (failure) {
        const Vector y = projective_representative(ctx.q, k, failure->first);
        std::string ys;
        for (Scalar a : y) ys += std::to_string(a);
        throw ConstructionError("class y = " + ys + ": " + failure->second, true);
    }
    sweep.notes.assign(notes.begin(), notes.end());
    return sweep;
}

}  // namespace minicode
