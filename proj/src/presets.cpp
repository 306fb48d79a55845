#include <functional>

#include "minicode/error.hpp"
#include "minicode/families.hpp"

namespace minicode {

namespace {

FunctionSpec tabulate(const Field& field, std::size_t m, const std::function<Scalar(const Vector&)>& fn) {
    TableFunction t;
    Vector x(m, 0);
    do {
        t.values.push_back(fn(x));
    } while (next_vector(field.q(), x));
    return FunctionSpec(field, m, std::move(t));
}

// phi(x) = (x1,x2,x3) when wt(x) <= 1 and (x1,x2,x3) != 0; (x4,x4,x4) when wt(x) = 1
// and (x1,x2,x3) = 0; (1,0,0) otherwise; g = 1.
//
// `literal` takes wt over all four coordinates, which gives phi(0) = phi(e_1) =
// (1,0,0) and does not reproduce the published enumerators.  Otherwise wt is read
// on the head h = (x1,x2,x3) and the second clause covers every x with h = 0; this
// reproduces both enumerators exactly, and gives phi(0) = 0.
FunctionSpec mm_example(const Field& field, bool literal) {
    MaioranaMcFarland mm;
    mm.s = 4;
    mm.t = 3;
    Vector beta(4, 0);
    do {
        const Vector head = {beta[0], beta[1], beta[2]};
        const std::size_t wt = literal ? weight(beta) : weight(head);
        const bool head_zero = is_zero(head);
        Vector image;
        if (wt <= 1 && !head_zero) {
            image = head;
        } else if (head_zero && (literal ? wt == 1 : true)) {
            image = {beta[3], beta[3], beta[3]};
        } else {
            image = {1, 0, 0};
        }
        mm.phi.push_back(std::move(image));
        mm.g.push_back(1);
    } while (next_vector(field.q(), beta));
    return FunctionSpec(field, 7, std::move(mm));
}

// Binary Maiorana-McFarland function with g = 1 and phi zero off U.  On U, phi maps
// 0 to e_1 and e_i to the binary expansion of i + 1 (least significant bit first).
FunctionSpec dhz_function() {
    const Field f2 = Field::make(2);
    const std::size_t s = 4, t = 3;
    MaioranaMcFarland mm;
    mm.s = s;
    mm.t = t;
    Vector beta(s, 0);
    do {
        Vector image(t, 0);
        const std::size_t wt = weight(beta);
        if (wt == 0) {
            image[0] = 1;
        } else if (wt == 1) {
            std::size_t i = 0;
            while (beta[i] == 0) ++i;
            const std::size_t code = i + 2;  // 1-based index plus one
            for (std::size_t b = 0; b < t; ++b) image[b] = (code >> b) & 1u;
        }
        mm.phi.push_back(std::move(image));
        mm.g.push_back(1);
    } while (next_vector(2, beta));
    return FunctionSpec(f2, s + t, std::move(mm));
}

Monomial monomial(std::size_t m, std::initializer_list<std::size_t> vars, Scalar coeff = 1) {
    Monomial g;
    g.coefficient = coeff;
    g.exponents.assign(m, 0);
    for (auto i : vars) g.exponents[i - 1] = 1;
    return g;
}

FunctionSpec monomial_sum(const Field& field, std::size_t m,
                          std::initializer_list<std::initializer_list<std::size_t>> terms) {
    MonomialSum ms;
    for (auto vars : terms) ms.terms.push_back(monomial(m, vars));
    return FunctionSpec(field, m, std::move(ms));
}

std::vector<Preset> build_presets() {
    const Field f2 = Field::make(2);
    const Field f3 = Field::make(3);
    std::vector<Preset> out;

    out.push_back({"sec4_f1", "ternary, m = 4: 1 on weights 1..2, else 0",
                   FunctionSpec(f3, 4, WeightThreshold{2, {1, 1}})});
    out.push_back({"sec4_f2", "ternary, m = 4: 1 on weights 1..2, x_1 on weight 3, 0 on weight 4",
                   tabulate(f3, 4, [](const Vector& x) -> Scalar {
                       const std::size_t w = weight(x);
                       if (w >= 1 && w <= 2) return 1;
                       if (w == 3) return x[0];
                       return 0;
                   })});
    out.push_back({"sec5_f1", "binary, m = 5: 0 on weights <= 2, else 1",
                   FunctionSpec(f2, 5, ComplementThreshold{2})});
    out.push_back({"sec5_f2", "binary, m = 5: 0 on weights <= 3, else 1",
                   FunctionSpec(f2, 5, ComplementThreshold{3})});
    out.push_back({"sec5_f3", "binary, m = 5: 0 on weights <= 2, x_1 + x_2 on weight 3, 1 on weights >= 4",
                   tabulate(f2, 5, [&](const Vector& x) -> Scalar {
                       const std::size_t w = weight(x);
                       if (w <= 2) return 0;
                       if (w == 3) return f2.add(x[0], x[1]);
                       return 1;
                   })});
    out.push_back({"sec6_q2", "binary Maiorana-McFarland example, s = 4, t = 3", mm_example(f2, false)});
    out.push_back({"sec6_q3", "ternary Maiorana-McFarland example, s = 4, t = 3", mm_example(f3, false)});
    out.push_back({"sec6_q2_literal", "sec6_q2 with wt taken over all of x", mm_example(f2, true)});
    out.push_back({"sec6_q3_literal", "sec6_q3 with wt taken over all of x", mm_example(f3, true)});
    out.push_back({"sec7_f1", "ternary, m = 8: x1x2x3x4 + x5x6x7x8",
                   monomial_sum(f3, 8, {{1, 2, 3, 4}, {5, 6, 7, 8}})});
    out.push_back({"sec7_f2", "ternary, m = 8: x1x2 + x3x4 + x5x6 + x7x8",
                   monomial_sum(f3, 8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}})});
    out.push_back({"sec7_f3", "ternary, m = 8: x1x2x3 + x4x5x6x7x8",
                   monomial_sum(f3, 8, {{1, 2, 3}, {4, 5, 6, 7, 8}})});
    out.push_back({"sec7_f4", "ternary, m = 8: x1x2x3 + x4x5x6x7",
                   monomial_sum(f3, 8, {{1, 2, 3}, {4, 5, 6, 7}})});
    out.push_back({"dhz_m7", "binary Maiorana-McFarland, m = 7, s = 4, t = 3, g = 1, phi = 0 off U",
                   dhz_function()});
    return out;
}

}  // namespace

const std::vector<Preset>& paper_presets() {
    static const std::vector<Preset> presets = build_presets();
    return presets;
}

const Preset* find_preset(std::string_view name) {
    for (const auto& p : paper_presets()) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

}  // namespace minicode
