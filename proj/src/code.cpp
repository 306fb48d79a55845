#include "minicode/code.hpp"

#include <json.hpp>
#include <sstream>

#include "minicode/error.hpp"
#include "minicode/parallel.hpp"

namespace minicode {

DefiningSet::DefiningSet(Field f, std::size_t dim, std::vector<Vector> vs)
    : field(std::move(f)), k(dim), vectors(std::move(vs)) {
    for (const auto& v : vectors) {
        if (v.size() != k) throw Error("defining set vectors must all have length k = " + std::to_string(k));
        for (Scalar a : v) {
            if (!field.contains(a)) throw Error("defining set entry outside F_" + std::to_string(field.q()));
        }
    }
}

std::uint64_t WeightEnumerator::total() const {
    std::uint64_t t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

std::uint64_t WeightEnumerator::count(std::size_t w) const {
    auto it = counts.find(w);
    return it == counts.end() ? 0 : it->second;
}

std::optional<std::size_t> WeightEnumerator::min_nonzero_weight() const {
    for (const auto& [w, c] : counts) {
        if (w > 0 && c > 0) return w;
    }
    return std::nullopt;
}

std::optional<std::size_t> WeightEnumerator::max_nonzero_weight() const {
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
        if (it->first > 0 && it->second > 0) return it->first;
    }
    return std::nullopt;
}

DefiningSet defining_set(const FunctionSpec& f) {
    const std::size_t m = f.arity();
    const std::uint32_t q = f.field().q();
    const std::uint64_t size = space_size(q, m);
    const FunctionSpec table = f.materialize();
    const auto& values = std::get<TableFunction>(table.variant()).values;

    std::vector<Vector> vs;
    vs.reserve(static_cast<std::size_t>(size - 1));
    Vector x(m, 0);
    std::uint64_t idx = 0;
    while (next_vector(q, x)) {
        ++idx;
        Vector d;
        d.reserve(m + 1);
        d.push_back(values[idx]);
        d.insert(d.end(), x.begin(), x.end());
        vs.push_back(std::move(d));
    }
    DefiningSet out(f.field(), m + 1, std::move(vs));
    out.origin = DefiningSet::Origin::from_function;
    out.m = m;
    return out;
}

std::optional<Vector> linearity_check(const FunctionSpec& f) {
    const std::size_t m = f.arity();
    const Field& field = f.field();
    Vector omega(m);
    for (std::size_t i = 1; i <= m; ++i) omega[i - 1] = f(unit_vector(m, i));
    Vector x(m, 0);
    while (next_vector(field.q(), x)) {
        if (f(x) != dot(field, omega, x)) return std::nullopt;
    }
    return omega;
}

Vector codeword(const Vector& y, const DefiningSet& d) {
    if (y.size() != d.k) {
        throw Error("message length " + std::to_string(y.size()) + " does not match k = " + std::to_string(d.k));
    }
    Vector c(d.n());
    for (std::size_t i = 0; i < d.n(); ++i) c[i] = dot(d.field, y, d.vectors[i]);
    return c;
}

namespace {

// Accumulates weights of sum_j y_j col_j over all y sharing a fixed prefix by
// depth-first traversal; each level keeps its partial sum.
class WeightKernel {
public:
    explicit WeightKernel(const DefiningSet& d) : field_(d.field), q_(d.field.q()), k_(d.k), n_(d.n()) {
        scaled_.resize(k_ * q_);
        for (std::size_t j = 0; j < k_; ++j) {
            Vector col(n_);
            for (std::size_t i = 0; i < n_; ++i) col[i] = d.vectors[i][j];
            for (Scalar a = 0; a < q_; ++a) scaled_[j * q_ + a] = scale(field_, a, col);
        }
    }

    // Adds the weights of every message whose first `prefix_len` digits encode `prefix`.
    void run(std::uint64_t prefix, std::size_t prefix_len, std::vector<std::uint64_t>& hist) const {
        std::vector<Vector> level(k_ + 1, Vector(n_, 0));
        const Vector digits = vector_at(q_, prefix_len, prefix);
        for (std::size_t j = 0; j < prefix_len; ++j) {
            level[j + 1] = level[j];
            add_into(level[j + 1], scaled_[j * q_ + digits[j]]);
        }
        descend(prefix_len, level, hist);
    }

private:
    void add_into(Vector& acc, const Vector& v) const {
        for (std::size_t i = 0; i < n_; ++i) acc[i] = field_.add(acc[i], v[i]);
    }

    void descend(std::size_t j, std::vector<Vector>& level, std::vector<std::uint64_t>& hist) const {
        if (j == k_) {
            ++hist[weight(level[k_])];
            return;
        }
        if (j + 1 == k_) {
            const Vector& base = level[j];
            for (Scalar a = 0; a < q_; ++a) {
                const Vector& s = scaled_[j * q_ + a];
                std::size_t w = 0;
                for (std::size_t i = 0; i < n_; ++i) w += field_.add(base[i], s[i]) != 0;
                ++hist[w];
            }
            return;
        }
        for (Scalar a = 0; a < q_; ++a) {
            level[j + 1] = level[j];
            add_into(level[j + 1], scaled_[j * q_ + a]);
            descend(j + 1, level, hist);
        }
    }

    Field field_;
    std::uint32_t q_;
    std::size_t k_;
    std::size_t n_;
    std::vector<Vector> scaled_;  // scaled_[j*q + a] = a * column j
};

}  // namespace

WeightEnumerator weight_distribution(const DefiningSet& d, unsigned jobs) {
    if (d.n() == 0 || d.k == 0) throw GuardError("weight distribution of an empty code is undefined");
    const std::uint32_t q = d.field.q();
    space_size(q, d.k, kMaxMessages);

    jobs = resolve_jobs(jobs);
    // Shard on leading message digits: enough shards to balance, never all k digits
    // unless k is tiny.
    std::size_t prefix_len = 0;
    std::uint64_t shards = 1;
    while (prefix_len + 1 < d.k && shards < 8ull * jobs) {
        shards *= q;
        ++prefix_len;
    }

    const WeightKernel kernel(d);
    std::vector<std::vector<std::uint64_t>> hist(jobs, std::vector<std::uint64_t>(d.n() + 1, 0));
    parallel_chunks(shards, jobs, [&](std::uint64_t shard, unsigned worker) {
        kernel.run(shard, prefix_len, hist[worker]);
    });

    WeightEnumerator we;
    we.q = q;
    we.n = d.n();
    we.k = d.k;
    for (std::size_t w = 0; w <= d.n(); ++w) {
        std::uint64_t c = 0;
        for (const auto& h : hist) c += h[w];
        if (c) we.counts[w] = c;
    }
    return we;
}

CodeParams params(const WeightEnumerator& we) {
    const auto lo = we.min_nonzero_weight();
    const auto hi = we.max_nonzero_weight();
    if (!lo || !hi) throw Error("code has no nonzero codeword");
    CodeParams p;
    p.n = we.n;
    p.k = we.k;
    p.d = *lo;
    p.w_min = *lo;
    p.w_max = *hi;
    p.ratio_exceeds_bound = static_cast<std::uint64_t>(we.q) * p.w_min > static_cast<std::uint64_t>(we.q - 1) * p.w_max;
    return p;
}

CodeParams params(const DefiningSet& d, unsigned jobs) { return params(weight_distribution(d, jobs)); }

Matrix generator_matrix(const DefiningSet& d) {
    Matrix g;
    g.cols = d.n();
    for (std::size_t j = 0; j < d.k; ++j) {
        Vector row(d.n());
        for (std::size_t i = 0; i < d.n(); ++i) row[i] = d.vectors[i][j];
        g.rows.push_back(std::move(row));
    }
    return g;
}

Matrix defining_matrix(const DefiningSet& d) { return Matrix(d.k, d.vectors); }

DefiningSet defining_set_from_matrix(const FieldMatrix& fm, bool transposed) {
    if (!transposed) return DefiningSet(fm.field, fm.matrix.cols, fm.matrix.rows);
    std::vector<Vector> vs(fm.matrix.cols, Vector(fm.matrix.row_count()));
    for (std::size_t j = 0; j < fm.matrix.row_count(); ++j) {
        for (std::size_t i = 0; i < fm.matrix.cols; ++i) vs[i][j] = fm.matrix.rows[j][i];
    }
    return DefiningSet(fm.field, fm.matrix.row_count(), std::move(vs));
}

std::string enumerator_text(const WeightEnumerator& we) {
    std::ostringstream out;
    out << we.count(0);
    for (const auto& [w, c] : we.counts) {
        if (w == 0) continue;
        out << " + " << c << " z^" << w;
    }
    return out.str();
}

std::string enumerator_json(const WeightEnumerator& we) {
    nlohmann::ordered_json doc;
    doc["q"] = we.q;
    doc["n"] = we.n;
    doc["k"] = we.k;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [w, c] : we.counts) counts[std::to_string(w)] = c;
    doc["counts"] = std::move(counts);
    return doc.dump(2) + "\n";
}

WeightEnumerator enumerator_from_json(const std::string& text) {
    WeightEnumerator we;
    try {
        const auto doc = nlohmann::json::parse(text);
        we.q = doc.at("q").get<std::uint32_t>();
        we.n = doc.at("n").get<std::size_t>();
        we.k = doc.at("k").get<std::size_t>();
        for (const auto& [key, value] : doc.at("counts").items()) {
            we.counts[std::stoul(key)] = value.get<std::uint64_t>();
        }
    } catch (const std::exception& e) {
        throw ParseError(std::string("weight enumerator document: ") + e.what());
    }
    return we;
}

WeightEnumerator parse_enumerator_text(const std::string& text, std::uint32_t q, std::size_t n, std::size_t k) {
    WeightEnumerator we;
    we.q = q;
    we.n = n;
    we.k = k;
    std::istringstream in(text);
    std::uint64_t c0;
    if (!(in >> c0)) throw ParseError("enumerator text must start with the weight-0 count");
    we.counts[0] = c0;
    std::string plus, term;
    while (in >> plus) {
        std::uint64_t c;
        if (plus != "+" || !(in >> c >> term) || term.rfind("z^", 0) != 0) {
            throw ParseError("enumerator text: expected '+ c z^w' terms");
        }
        we.counts[std::stoul(term.substr(2))] += c;
    }
    return we;
}

}  // namespace minicode
