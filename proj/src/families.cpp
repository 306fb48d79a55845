#include "minicode/families.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "minicode/error.hpp"

namespace minicode {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Scalar power(const Field& field, Scalar base, unsigned exp) {
    Scalar r = 1;
    while (exp) {
        if (exp & 1u) r = field.mul(r, base);
        base = field.mul(base, base);
        exp >>= 1u;
    }
    return r;
}

void check_scalar(const Field& field, Scalar a, const char* what) {
    if (!field.contains(a)) throw Error(std::string(what) + ": value " + std::to_string(a) + " not in F_q");
}

Vector head(const Vector& x, std::size_t s) { return Vector(x.begin(), x.begin() + static_cast<long>(s)); }
Vector tail(const Vector& x, std::size_t s) { return Vector(x.begin() + static_cast<long>(s), x.end()); }

}  // namespace

FunctionSpec::FunctionSpec(Field field, std::size_t m, Variant variant)
    : field_(std::move(field)), m_(m), variant_(std::move(variant)) {
    if (m_ == 0) throw Error("function arity must be at least 1");
    const std::uint32_t q = field_.q();
    std::visit(overloaded{
                   [&](const TableFunction& t) {
                       if (t.values.size() != space_size(q, m_)) {
                           throw Error("table function needs exactly q^m = " + std::to_string(space_size(q, m_)) +
                                       " values, got " + std::to_string(t.values.size()));
                       }
                       for (Scalar v : t.values) check_scalar(field_, v, "table function");
                   },
                   [&](const WeightThreshold& w) {
                       if (w.t < 1 || w.t > m_) throw Error("weight threshold t must satisfy 1 <= t <= m");
                       if (w.values.size() != w.t) throw Error("weight threshold needs one value per weight 1..t");
                       for (Scalar a : w.values) {
                           check_scalar(field_, a, "weight threshold");
                           if (a == 0) throw Error("weight threshold values must be nonzero");
                       }
                   },
                   [&](const ComplementThreshold& c) {
                       if (c.t > m_) throw Error("complement threshold t must not exceed m");
                   },
                   [&](const MaioranaMcFarland& mm) {
                       if (mm.s + mm.t != m_ || mm.s == 0 || mm.t == 0) {
                           throw Error("Maiorana-McFarland function needs s, t >= 1 with s + t = m");
                       }
                       const std::uint64_t n = space_size(q, mm.s);
                       if (mm.phi.size() != n || mm.g.size() != n) {
                           throw Error("Maiorana-McFarland phi and g tables need q^s entries");
                       }
                       for (const auto& row : mm.phi) {
                           if (row.size() != mm.t) throw Error("phi values must lie in F_q^t");
                           for (Scalar a : row) check_scalar(field_, a, "phi");
                       }
                       for (Scalar a : mm.g) check_scalar(field_, a, "g");
                   },
                   [&](const MonomialSum& ms) {
                       for (const auto& term : ms.terms) {
                           check_scalar(field_, term.coefficient, "monomial coefficient");
                           if (term.coefficient == 0) throw Error("monomial coefficients must be nonzero");
                           if (term.exponents.size() != m_) throw Error("monomial exponent vector must have length m");
                       }
                   },
               },
               variant_);
}

std::string_view FunctionSpec::variant_name() const {
    static constexpr std::string_view names[] = {"table", "weight-threshold", "complement-threshold",
                                                 "maiorana-mcfarland", "monomial-sum"};
    return names[variant_.index()];
}

Scalar FunctionSpec::operator()(const Vector& x) const {
    if (x.size() != m_) {
        throw Error("function of arity " + std::to_string(m_) + " evaluated at a vector of length " +
                    std::to_string(x.size()));
    }
    return std::visit(overloaded{
                          [&](const TableFunction& t) { return t.values[index_of(field_.q(), x)]; },
                          [&](const WeightThreshold& w) {
                              const std::size_t wt = weight(x);
                              return (wt >= 1 && wt <= w.t) ? w.values[wt - 1] : Scalar{0};
                          },
                          [&](const ComplementThreshold& c) { return weight(x) <= c.t ? Scalar{0} : Scalar{1}; },
                          [&](const MaioranaMcFarland& mm) {
                              const std::uint64_t b = index_of(field_.q(), head(x, mm.s));
                              return field_.add(dot(field_, mm.phi[b], tail(x, mm.s)), mm.g[b]);
                          },
                          [&](const MonomialSum& ms) {
                              Scalar acc = 0;
                              for (const auto& term : ms.terms) {
                                  Scalar prod = term.coefficient;
                                  for (std::size_t i = 0; i < m_ && prod != 0; ++i) {
                                      if (term.exponents[i]) prod = field_.mul(prod, power(field_, x[i], term.exponents[i]));
                                  }
                                  acc = field_.add(acc, prod);
                              }
                              return acc;
                          },
                      },
                      variant_);
}

FunctionSpec FunctionSpec::materialize() const {
    if (is_table()) return *this;
    const std::uint64_t n = space_size(field_.q(), m_);
    TableFunction table;
    table.values.reserve(static_cast<std::size_t>(n));
    Vector x(m_, 0);
    do {
        table.values.push_back((*this)(x));
    } while (next_vector(field_.q(), x));
    return FunctionSpec(field_, m_, std::move(table));
}

std::vector<std::size_t> monomial_support(const std::vector<unsigned>& exponents) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] != 0) s.push_back(i + 1);
    }
    return s;
}

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::A1: return "A1";
        case TheoremId::A2: return "A2";
        case TheoremId::B: return "B";
        case TheoremId::C1: return "C1";
        case TheoremId::C2: return "C2";
        case TheoremId::D1: return "D1";
        case TheoremId::D2: return "D2";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view s) {
    for (TheoremId id : kAllTheorems) {
        if (to_string(id) == s) return id;
    }
    return std::nullopt;
}

// ---- hypothesis validation -----------------------------------------------------

namespace {

HypothesisResult fail(std::string condition, std::optional<Vector> witness = std::nullopt,
                      std::optional<Vector> other = std::nullopt) {
    return HypothesisResult{false, std::move(condition), std::move(witness), std::move(other)};
}

// First x with lo <= wt(x) <= hi violating pred, scanning weights upward.
template <typename Pred>
std::optional<Vector> first_violation(const FunctionSpec& f, std::size_t lo, std::size_t hi, Pred&& pred) {
    std::optional<Vector> bad;
    for (std::size_t w = lo; w <= hi && w <= f.arity() && !bad; ++w) {
        for_each_vector_of_weight(f.field().q(), f.arity(), w, [&](const Vector& x) {
            if (!bad && !pred(x)) bad = x;
        });
    }
    return bad;
}

// For every x with lo <= wt(x) <= hi and every a in F_q^*: f(ax) = f(x) != 0.
HypothesisResult check_scalar_invariant_nonzero(const FunctionSpec& f, std::size_t lo, std::size_t hi,
                                                const std::string& label) {
    const Field& field = f.field();
    std::optional<Vector> other;
    auto bad = first_violation(f, lo, hi, [&](const Vector& x) {
        const Scalar fx = f(x);
        if (fx == 0) return false;
        for (Scalar a = 2; a < field.q(); ++a) {
            Vector ax = scale(field, a, x);
            if (f(ax) != fx) {
                other = std::move(ax);
                return false;
            }
        }
        return true;
    });
    if (!bad) return {};
    if (other) return fail(label + ": f(ax) = f(x) for all a != 0", bad, other);
    return fail(label + ": f(x) != 0", bad);
}

HypothesisResult check_value(const FunctionSpec& f, std::size_t lo, std::size_t hi, Scalar value,
                             const std::string& label) {
    auto bad = first_violation(f, lo, hi, [&](const Vector& x) { return f(x) == value; });
    if (bad) return fail(label, bad);
    return {};
}

HypothesisResult validate_a1(const FunctionSpec& f) {
    const std::size_t m = f.arity();
    if (f.field().q() <= 2) return fail("side constraint: q > 2");
    if (m < 3) return fail("side constraint: m >= 3");
    if (auto r = check_scalar_invariant_nonzero(f, 1, 2, "condition (1), 1 <= wt(x) <= 2"); !r) return r;
    return check_value(f, m, m, 0, "condition (2), wt(x) = m implies f(x) = 0");
}

HypothesisResult validate_a2(const FunctionSpec& f) {
    const std::size_t m = f.arity();
    if (f.field().q() != 2) return fail("side constraint: q = 2");
    if (m < 4) return fail("side constraint: m >= 4");
    if (auto r = check_value(f, 1, 2, 1, "condition (1), 1 <= wt(x) <= 2 implies f(x) = 1"); !r) return r;
    const std::size_t lo = (m % 2 == 0) ? m - 1 : m - 2;
    return check_value(f, lo, m, 0,
                       (m % 2 == 0) ? "condition (2), m even and wt(x) >= m-1 implies f(x) = 0"
                                    : "condition (2), m odd and wt(x) >= m-2 implies f(x) = 0");
}

HypothesisResult validate_b(const FunctionSpec& f) {
    const std::size_t m = f.arity();
    if (auto r = check_value(f, 1, 2, 0, "condition (1), 1 <= wt(x) <= 2 implies f(x) = 0"); !r) return r;
    return check_scalar_invariant_nonzero(f, m >= 1 ? m - 1 : 0, m, "condition (2), wt(x) >= m-1");
}

const MaioranaMcFarland& require_mm(const FunctionSpec& f, TheoremId thm) {
    if (const auto* mm = std::get_if<MaioranaMcFarland>(&f.variant())) return *mm;
    throw Error("theorem " + std::string(to_string(thm)) + " needs a maiorana-mcfarland function, got " +
                std::string(f.variant_name()));
}

const MonomialSum& require_monomials(const FunctionSpec& f, TheoremId thm) {
    if (const auto* ms = std::get_if<MonomialSum>(&f.variant())) return *ms;
    throw Error("theorem " + std::string(to_string(thm)) + " needs a monomial-sum function, got " +
                std::string(f.variant_name()));
}

// phi restricted to U = {beta : wt(beta) <= 1} is injective into F_q^t \ {0}.
HypothesisResult check_phi_injective_on_u(const FunctionSpec& f, const MaioranaMcFarland& mm) {
    const std::uint32_t q = f.field().q();
    std::vector<Vector> seen_points;
    std::vector<Vector> seen_images;
    HypothesisResult result;
    for (std::size_t w = 0; w <= 1 && result.pass; ++w) {
        for_each_vector_of_weight(q, mm.s, w, [&](const Vector& beta) {
            if (!result.pass) return;
            const Vector& image = mm.phi[index_of(q, beta)];
            if (is_zero(image)) {
                result = fail("condition (1), phi(beta) != 0 on U", beta);
                return;
            }
            for (std::size_t i = 0; i < seen_images.size(); ++i) {
                if (seen_images[i] == image) {
                    result = fail("condition (1), phi injective on U", beta, seen_points[i]);
                    return;
                }
            }
            seen_points.push_back(beta);
            seen_images.push_back(image);
        });
    }
    return result;
}

HypothesisResult check_g_constant(const Field& field, const MaioranaMcFarland& mm, std::optional<Scalar> required) {
    const Scalar c = mm.g.front();
    for (std::size_t i = 0; i < mm.g.size(); ++i) {
        if (mm.g[i] != c) return fail("condition (2), g constant", vector_at(field.q(), mm.s, i));
    }
    if (c == 0) return fail("condition (2), g = c != 0", vector_at(field.q(), mm.s, 0));
    if (required && c != *required) return fail("condition (2), g = 1", vector_at(field.q(), mm.s, 0));
    return {};
}

HypothesisResult validate_c(const FunctionSpec& f, TheoremId thm) {
    const MaioranaMcFarland& mm = require_mm(f, thm);
    const std::uint32_t q = f.field().q();
    if (thm == TheoremId::C1 && q <= 2) return fail("side constraint: q > 2");
    if (thm == TheoremId::C2 && q != 2) return fail("side constraint: q = 2");
    if (mm.s < 2) return fail("side constraint: s >= 2");
    if (mm.t < 2) return fail("side constraint: t >= 2");
    if (auto r = check_phi_injective_on_u(f, mm); !r) return r;
    if (thm == TheoremId::C2) {
        HypothesisResult r;
        for_each_vector_of_weight(q, mm.s, 2, [&](const Vector& beta) {
            if (r.pass && !is_zero(mm.phi[index_of(q, beta)])) {
                r = fail("condition (1), phi(beta) = 0 when wt(beta) = 2", beta);
            }
        });
        if (!r) return r;
        return check_g_constant(f.field(), mm, Scalar{1});
    }
    return check_g_constant(f.field(), mm, std::nullopt);
}

HypothesisResult validate_d(const FunctionSpec& f, TheoremId thm) {
    const MonomialSum& ms = require_monomials(f, thm);
    if (ms.terms.size() < 2) return fail("side constraint: t >= 2");
    const std::size_t min_support = (thm == TheoremId::D1) ? 3 : 2;
    std::set<std::size_t> used;
    for (const auto& term : ms.terms) {
        const auto s = monomial_support(term.exponents);
        Vector exps(term.exponents.begin(), term.exponents.end());
        for (auto i : s) {
            if (!used.insert(i).second) return fail("condition (1), supports s(g_j) disjoint", exps);
        }
        if (s.size() < min_support) {
            return fail(thm == TheoremId::D1 ? "condition (2), #s(g_j) >= 3" : "condition (2), #s(g_j) >= 2",
                        exps);
        }
        if (thm == TheoremId::D2) {
            for (unsigned b : term.exponents) {
                if (b > 1) return fail("condition (3), exponents in {0, 1}", exps);
            }
        }
    }
    return {};
}

}  // namespace

HypothesisResult validate_hypotheses(const FunctionSpec& f, TheoremId thm) {
    switch (thm) {
        case TheoremId::A1: return validate_a1(f);
        case TheoremId::A2: return validate_a2(f);
        case TheoremId::B: return validate_b(f);
        case TheoremId::C1:
        case TheoremId::C2: return validate_c(f, thm);
        case TheoremId::D1:
        case TheoremId::D2: return validate_d(f, thm);
    }
    throw Error("unknown theorem");
}

// ---- file format -------------------------------------------------------------

void write_function(std::ostream& out, const FunctionSpec& f) {
    out << f.field().q() << ' ' << f.arity() << ' ' << f.variant_name() << '\n';
    auto write_row = [&](const auto& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out << ' ';
            out << values[i];
        }
        out << '\n';
    };
    std::visit(overloaded{
                   [&](const TableFunction& t) { write_row(t.values); },
                   [&](const WeightThreshold& w) {
                       out << w.t;
                       for (Scalar a : w.values) out << ' ' << a;
                       out << '\n';
                   },
                   [&](const ComplementThreshold& c) { out << c.t << '\n'; },
                   [&](const MaioranaMcFarland& mm) {
                       out << mm.s << ' ' << mm.t << '\n';
                       for (std::size_t i = 0; i < mm.phi.size(); ++i) {
                           Vector row = mm.phi[i];
                           row.push_back(mm.g[i]);
                           write_row(row);
                       }
                   },
                   [&](const MonomialSum& ms) {
                       out << ms.terms.size() << '\n';
                       for (const auto& term : ms.terms) {
                           out << term.coefficient;
                           for (unsigned b : term.exponents) out << ' ' << b;
                           out << '\n';
                       }
                   },
               },
               f.variant());
}

FunctionSpec read_function(std::istream& in) {
    std::uint64_t q = 0, m = 0;
    std::string variant;
    if (!(in >> q >> m >> variant)) throw ParseError("function: header must be 'q m variant'");
    Field field = Field::of_order(static_cast<std::uint32_t>(q));
    auto next = [&](const char* what) {
        std::uint64_t v;
        if (!(in >> v)) throw ParseError(std::string("function: expected ") + what);
        return v;
    };
    try {
        if (variant == "table") {
            TableFunction t;
            const std::uint64_t n = space_size(field.q(), m);
            for (std::uint64_t i = 0; i < n; ++i) t.values.push_back(static_cast<Scalar>(next("table value")));
            return FunctionSpec(field, m, std::move(t));
        }
        if (variant == "weight-threshold") {
            WeightThreshold w;
            w.t = next("t");
            for (std::size_t i = 0; i < w.t; ++i) w.values.push_back(static_cast<Scalar>(next("a_i")));
            return FunctionSpec(field, m, std::move(w));
        }
        if (variant == "complement-threshold") {
            return FunctionSpec(field, m, ComplementThreshold{static_cast<std::size_t>(next("t"))});
        }
        if (variant == "maiorana-mcfarland") {
            MaioranaMcFarland mm;
            mm.s = next("s");
            mm.t = next("t");
            const std::uint64_t n = space_size(field.q(), mm.s);
            for (std::uint64_t i = 0; i < n; ++i) {
                Vector row;
                for (std::size_t j = 0; j < mm.t; ++j) row.push_back(static_cast<Scalar>(next("phi value")));
                mm.phi.push_back(std::move(row));
                mm.g.push_back(static_cast<Scalar>(next("g value")));
            }
            return FunctionSpec(field, m, std::move(mm));
        }
        if (variant == "monomial-sum") {
            MonomialSum ms;
            const std::uint64_t count = next("term count");
            for (std::uint64_t j = 0; j < count; ++j) {
                Monomial term;
                term.coefficient = static_cast<Scalar>(next("coefficient"));
                for (std::size_t i = 0; i < m; ++i) term.exponents.push_back(static_cast<unsigned>(next("exponent")));
                ms.terms.push_back(std::move(term));
            }
            return FunctionSpec(field, m, std::move(ms));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const GuardError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("function: ") + e.what());
    }
    throw ParseError("function: unknown variant '" + variant + "'");
}

}  // namespace minicode
