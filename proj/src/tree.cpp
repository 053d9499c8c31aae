#include "mvp/tree.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mvp/rng.hpp"

namespace mvp {

namespace {

constexpr std::size_t kVertexBudget = 10000000;

std::size_t checked_pow(long q, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > kVertexBudget)
            return kVertexBudget + 1;
        r *= static_cast<std::size_t>(q);
    }
    return r;
}

Rational extension_value(const TreeFn& f) {
    switch (f.ext) {
        case Extension::zero: return Rational(0);
        case Extension::constant: return f.ext_value;
        default: throw std::out_of_range("TreeFn: access beyond stored radius");
    }
}

// Value of f at flat position (level, idx); levels past the ball defer to
// the extension. Valid for level <= radius + 1.
Rational stored_or_ext(const TreeFn& f, int level, std::size_t idx) {
    if (level <= f.radius)
        return f.at(level, idx);
    return extension_value(f);
}

// Laplacian at one vertex. Callers guarantee level <= f.radius - 1 for
// Extension::none and level <= f.radius + 1 otherwise, so the parent is
// always stored.
Rational lap_value(const TreeFn& f, int level, std::size_t w) {
    long q = f.q;
    Rational sum(0);
    if (level == 0) {
        for (long c = 0; c <= q; ++c)
            sum += stored_or_ext(f, 1, static_cast<std::size_t>(c));
    } else {
        // level-1 vertices all hang off the root; deeper ones drop a digit
        std::size_t parent = (level == 1) ? 0 : w / static_cast<std::size_t>(q);
        sum += f.at(level - 1, parent);
        for (long c = 0; c < q; ++c)
            sum += stored_or_ext(f, level + 1, w * static_cast<std::size_t>(q) +
                                                   static_cast<std::size_t>(c));
    }
    return sum / Rational(q + 1) - stored_or_ext(f, level, w);
}

// Exact rational addition is associative, so per-thread partial sums give
// the same canonical value in any combination order.
Rational range_sum(const std::vector<Rational>& vals, std::size_t lo, std::size_t hi) {
    Rational total(0);
#pragma omp parallel
    {
        Rational local(0);
#pragma omp for schedule(static) nowait
        for (long long i = static_cast<long long>(lo); i < static_cast<long long>(hi); ++i)
            local += vals[static_cast<std::size_t>(i)];
#pragma omp critical
        total += local;
    }
    return total;
}

void prepare_output(const TreeFn& f, TreeFn& out) {
    if (f.ext == Extension::none) {
        if (f.radius < 1)
            throw std::domain_error("tree_laplacian: radius 0 ball has no interior");
        out = TreeFn::make_zeroed(f.q, f.radius - 1);
        out.ext = Extension::none;
    } else {
        out = TreeFn::make_zeroed(f.q, f.radius + 1);
        out.ext = Extension::zero;
    }
    out.provenance = f.provenance;
}

}  // namespace

std::vector<int> parse_address(const std::string& s, long q) {
    std::vector<int> path;
    if (s.empty())
        return path;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t dot = s.find('.', start);
        std::string part = s.substr(start, dot == std::string::npos ? std::string::npos
                                                                    : dot - start);
        if (part.empty())
            throw std::invalid_argument("parse_address: empty component");
        int v = std::stoi(part);
        long hi = path.empty() ? q : q - 1;
        if (v < 0 || v > hi)
            throw std::invalid_argument("parse_address: branch index out of range");
        path.push_back(v);
        if (dot == std::string::npos)
            break;
        start = dot + 1;
    }
    return path;
}

std::string format_address(const std::vector<int>& path) {
    std::ostringstream os;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i)
            os << '.';
        os << path[i];
    }
    return os.str();
}

std::size_t TreeFn::ball_size(long q, int radius) {
    if (q < 2)
        throw std::invalid_argument("TreeFn: q must be >= 2");
    if (radius < 0)
        throw std::invalid_argument("TreeFn: negative radius");
    // 1 + (q+1)(q^R - 1)/(q - 1)
    mpz_class total = 1 + (q + 1) * (int_pow(q, static_cast<unsigned long>(radius)) - 1) / (q - 1);
    if (total > kVertexBudget)
        throw std::invalid_argument("TreeFn: vertex budget exceeded");
    return total.get_ui();
}

TreeFn TreeFn::make_zeroed(long q, int radius) {
    std::size_t total = ball_size(q, radius);
    TreeFn f;
    f.q = q;
    f.radius = radius;
    f.offsets.resize(static_cast<std::size_t>(radius) + 2);
    f.offsets[0] = 0;
    std::size_t acc = 1;
    for (int l = 1; l <= radius + 1; ++l) {
        f.offsets[static_cast<std::size_t>(l)] = acc;
        if (l <= radius)
            acc += static_cast<std::size_t>(q + 1) * checked_pow(q, l - 1);
    }
    f.values.assign(total, Rational(0));
    return f;
}

std::size_t TreeFn::level_size(int level) const {
    if (level == 0)
        return 1;
    return static_cast<std::size_t>(q + 1) * checked_pow(q, level - 1);
}

Rational& TreeFn::at(int level, std::size_t idx) {
    return values[offsets[static_cast<std::size_t>(level)] + idx];
}

const Rational& TreeFn::at(int level, std::size_t idx) const {
    return values[offsets[static_cast<std::size_t>(level)] + idx];
}

Rational TreeFn::value(const std::vector<int>& path) const {
    int level = static_cast<int>(path.size());
    if (level > radius)
        return extension_value(*this);
    if (level == 0)
        return at(0, 0);
    // The first step has q+1 branches, later steps q; the flat index is the
    // first digit at place value q^(level-1) plus the base-q tail.
    std::size_t pw = checked_pow(q, level - 1);
    std::size_t idx = static_cast<std::size_t>(path[0]) * pw;
    std::size_t rest = 0;
    for (std::size_t i = 1; i < path.size(); ++i)
        rest = rest * static_cast<std::size_t>(q) + static_cast<std::size_t>(path[i]);
    return at(level, idx + rest);
}

TreeFn TreeFn::make_chi(long q, int radius) {
    if (radius < 1)
        throw std::invalid_argument("make_chi: radius must be >= 1");
    TreeFn f = make_zeroed(q, radius);
    f.ext = Extension::zero;
    f.provenance = "chi";
    f.at(0, 0) = Rational(1);
    return f;
}

TreeFn TreeFn::make_constant(const Rational& c, long q, int radius) {
    if (radius < 1)
        throw std::invalid_argument("make_constant: radius must be >= 1");
    TreeFn f = make_zeroed(q, radius);
    f.ext = Extension::constant;
    f.ext_value = c;
    f.provenance = "constant";
    for (auto& v : f.values)
        v = c;
    return f;
}

TreeFn TreeFn::make_busemann(long q, int radius, int end_dir) {
    if (radius < 1)
        throw std::invalid_argument("make_busemann: radius must be >= 1");
    if (end_dir < 0 || end_dir > q)
        throw std::invalid_argument("make_busemann: direction out of range");
    TreeFn f = make_zeroed(q, radius);
    f.ext = Extension::none;
    f.provenance = "busemann";
    // h(u) = q^(2j - L) where L = |u| and j is the length of the common
    // prefix of u with the ray end_dir, 0, 0, ...
    std::vector<Rational> qpow(static_cast<std::size_t>(2 * radius) + 1);
    for (int e = -radius; e <= radius; ++e)
        qpow[static_cast<std::size_t>(e + radius)] = rat_pow(Rational(q), e);
    f.at(0, 0) = qpow[static_cast<std::size_t>(radius)];
    for (int l = 1; l <= radius; ++l) {
        std::size_t pw = checked_pow(q, l - 1);
        std::size_t sz = f.level_size(l);
#pragma omp parallel for schedule(static)
        for (long long ww = 0; ww < static_cast<long long>(sz); ++ww) {
            std::size_t w = static_cast<std::size_t>(ww);
            int j = 0;
            if (static_cast<long>(w / pw) == end_dir) {
                j = 1;
                std::size_t rest = w % pw;
                std::size_t place = pw / static_cast<std::size_t>(q);
                for (int i = 1; i < l; ++i) {
                    if (rest / place != 0)
                        break;
                    ++j;
                    rest %= place;
                    place /= static_cast<std::size_t>(q);
                }
            }
            f.at(l, w) = qpow[static_cast<std::size_t>(2 * j - l + radius)];
        }
    }
    return f;
}

TreeFn TreeFn::make_random(long q, int radius, std::uint64_t seed) {
    if (radius < 1)
        throw std::invalid_argument("make_random: radius must be >= 1");
    TreeFn f = make_zeroed(q, radius);
    f.ext = Extension::none;
    f.provenance = "random(" + std::to_string(seed) + ")";
    std::mt19937_64 eng(seed);
    for (auto& v : f.values)
        v = random_rational(eng);
    return f;
}

ordered_json TreeFn::to_json() const {
    ordered_json j;
    j["q"] = q;
    j["radius"] = radius;
    ordered_json vals = ordered_json::object();
    std::vector<int> path;
    // Depth-first in address order keeps the export canonical.
    vals[""] = at(0, 0).str();
    for (int l = 1; l <= radius; ++l) {
        std::size_t sz = level_size(l);
        for (std::size_t w = 0; w < sz; ++w) {
            std::size_t pw = checked_pow(q, l - 1);
            path.assign(1, static_cast<int>(w / pw));
            std::size_t rest = w % pw;
            std::size_t place = pw / static_cast<std::size_t>(q);
            for (int i = 1; i < l; ++i) {
                path.push_back(static_cast<int>(rest / place));
                rest %= place;
                place /= static_cast<std::size_t>(q);
            }
            vals[format_address(path)] = at(l, static_cast<std::size_t>(w)).str();
        }
    }
    j["values"] = vals;
    return j;
}

TreeFn TreeFn::from_json(const ordered_json& j) {
    long q = j.at("q").get<long>();
    int radius = j.at("radius").get<int>();
    TreeFn f = make_zeroed(q, radius);
    f.ext = Extension::none;
    f.provenance = "explicit";
    if (j.at("values").size() != f.values.size())
        throw std::invalid_argument("TreeFn: value count does not cover the ball");
    for (const auto& [addr, val] : j.at("values").items()) {
        std::vector<int> path = parse_address(addr, q);
        int level = static_cast<int>(path.size());
        if (level > radius)
            throw std::invalid_argument("TreeFn: address beyond radius");
        std::size_t idx = 0;
        if (level >= 1) {
            std::size_t pw = checked_pow(q, level - 1);
            idx = static_cast<std::size_t>(path[0]) * pw;
            std::size_t rest = 0;
            for (std::size_t i = 1; i < path.size(); ++i)
                rest = rest * static_cast<std::size_t>(q) + static_cast<std::size_t>(path[i]);
            idx += rest;
        }
        f.at(level, idx) = Rational::parse(val.get<std::string>());
    }
    return f;
}

TreeFn tree_laplacian(const TreeFn& f) {
    TreeFn out;
    prepare_output(f, out);
    out.at(0, 0) = lap_value(f, 0, 0);
    for (int l = 1; l <= out.radius; ++l) {
        std::size_t sz = out.level_size(l);
#pragma omp parallel for schedule(static)
        for (long long w = 0; w < static_cast<long long>(sz); ++w)
            out.at(l, static_cast<std::size_t>(w)) =
                lap_value(f, l, static_cast<std::size_t>(w));
    }
    return out;
}

TreeFn tree_laplacian_serial(const TreeFn& f) {
    TreeFn out;
    prepare_output(f, out);
    for (int l = 0; l <= out.radius; ++l) {
        std::size_t sz = out.level_size(l);
        for (std::size_t w = 0; w < sz; ++w)
            out.at(l, w) = lap_value(f, l, w);
    }
    return out;
}

Rational horocycle_avg(const TreeFn& f, int n, int marked_dir) {
    if (marked_dir < 0)
        marked_dir = static_cast<int>(f.q);
    if (marked_dir > f.q)
        throw std::invalid_argument("horocycle_avg: direction out of range");
    if (n < 0)
        throw std::invalid_argument("horocycle_avg: negative n");
    if (n == 0)
        return f.at(0, 0);
    if (n > f.radius)
        return extension_value(f);
    std::size_t block = checked_pow(f.q, n - 1);
    std::size_t base = f.offsets[static_cast<std::size_t>(n)];
    std::size_t lo = base, hi = base + f.level_size(n);
    std::size_t skip_lo = base + static_cast<std::size_t>(marked_dir) * block;
    Rational sum = range_sum(f.values, lo, skip_lo) +
                   range_sum(f.values, skip_lo + block, hi);
    return sum / Rational(int_pow(f.q, static_cast<unsigned long>(n)));
}

Rational sphere_sum(const TreeFn& f, int n) {
    if (n < 0)
        throw std::invalid_argument("sphere_sum: negative n");
    if (n == 0)
        return f.at(0, 0);
    if (n > f.radius) {
        Rational v = extension_value(f);
        if (v.is_zero())
            return v;
        return v * Rational(mpz_class((f.q + 1) * int_pow(f.q, static_cast<unsigned long>(n - 1))));
    }
    std::size_t base = f.offsets[static_cast<std::size_t>(n)];
    return range_sum(f.values, base, base + f.level_size(n));
}

bool is_harmonic_interior(const TreeFn& f) {
    if (f.ext == Extension::none && f.radius < 1)
        return true;
    TreeFn lap = tree_laplacian(f);
    for (const auto& v : lap.values)
        if (!v.is_zero())
            return false;
    return true;
}

bool HorocycleData::has(int i, int m) const {
    return i >= 0 && i <= kmax && m >= 0 &&
           i < static_cast<int>(limit.size()) && m <= limit[static_cast<size_t>(i)];
}

Rational HorocycleData::cone_avg(int i, int m, int marked_dir) const {
    if (marked_dir < 0)
        marked_dir = static_cast<int>(q);
    if (!has(i, m))
        throw std::out_of_range("HorocycleData: entry not collected");
    if (m == 0)
        return tower_center[static_cast<std::size_t>(i)];
    const auto& blk = blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    Rational sum(0);
    for (long e = 0; e <= q; ++e)
        if (e != marked_dir)
            sum += blk[static_cast<std::size_t>(e)];
    return sum / Rational(int_pow(q, static_cast<unsigned long>(m)));
}

Rational HorocycleData::circle_sum(int i, int m) const {
    if (!has(i, m))
        throw std::out_of_range("HorocycleData: entry not collected");
    if (m == 0)
        return tower_center[static_cast<std::size_t>(i)];
    const auto& blk = blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    Rational sum(0);
    for (const auto& b : blk)
        sum += b;
    return sum;
}

HorocycleData collect_horocycle_data(const TreeFn& f, int kmax, int mmax) {
    HorocycleData d;
    d.q = f.q;
    d.kmax = kmax;
    d.mmax = mmax;
    d.center = f.at(0, 0);
    TreeFn cur = f;
    for (int i = 0; i <= kmax; ++i) {
        int lim = (cur.ext == Extension::none) ? std::min(mmax, cur.radius) : mmax;
        d.limit.push_back(lim);
        d.tower_center.push_back(cur.at(0, 0));
        std::vector<std::vector<Rational>> per_level(static_cast<std::size_t>(lim) + 1);
        for (int m = 1; m <= lim; ++m) {
            std::vector<Rational> blk(static_cast<std::size_t>(f.q) + 1, Rational(0));
            if (m <= cur.radius) {
                std::size_t block = checked_pow(cur.q, m - 1);
                std::size_t base = cur.offsets[static_cast<std::size_t>(m)];
                for (long e = 0; e <= f.q; ++e)
                    blk[static_cast<std::size_t>(e)] =
                        range_sum(cur.values, base + static_cast<std::size_t>(e) * block,
                                  base + (static_cast<std::size_t>(e) + 1) * block);
            } else {
                Rational v = extension_value(cur);
                if (!v.is_zero()) {
                    Rational count(int_pow(cur.q, static_cast<unsigned long>(m - 1)));
                    for (auto& b : blk)
                        b = v * count;
                }
            }
            per_level[static_cast<std::size_t>(m)] = std::move(blk);
        }
        d.blocks.push_back(std::move(per_level));
        if (i == kmax)
            break;
        if (cur.ext == Extension::none && cur.radius == 0)
            break;  // tower cannot continue; has() reports the gap
        cur = tree_laplacian(cur);
    }
    return d;
}

CheckReport cone_identity_check(const TreeFn& f, int n, const CoeffTable& table,
                                int marked_dir) {
    if (n < 0)
        throw std::invalid_argument("cone_identity_check: negative n");
    HorocycleData d = collect_horocycle_data(f, n, 2 * n);
    CheckReport rep;
    rep.check = "cone_identity";
    rep.params["q"] = f.q;
    rep.params["n"] = n;
    rep.params["radius"] = f.radius;
    rep.params["function"] = f.provenance;
    if (!d.has(0, 2 * n))
        throw std::invalid_argument("cone_identity_check: radius below 2n");
    Rational lhs = d.center +
                   Rational(int_pow(f.q, static_cast<unsigned long>(n))) *
                       d.cone_avg(0, 2 * n, marked_dir);
    Rational rhs(0);
    for (int k = 0; k <= n; ++k)
        rhs += table.a(n, k) * d.cone_avg(k, n, marked_dir);
    rep.pass = (lhs == rhs);
    if (!rep.pass) {
        rep.params["lhs"] = lhs.str();
        rep.params["rhs"] = rhs.str();
    }
    return rep;
}

CheckReport cone_identity_check(const TreeFn& f, int n) {
    return cone_identity_check(f, n, CoeffTable::build(f.q, n));
}

std::string PartialSumSeq::to_jsonl() const {
    std::ostringstream os;
    for (const auto& [n, v] : entries) {
        ordered_json j;
        j["kind"] = kind;
        j["n"] = n;
        j["num"] = v.num_str();
        j["den"] = v.den_str();
        os << j.dump() << "\n";
    }
    return os.str();
}

PartialSumSeq horocyclic_partial_sums(const HorocycleData& data, int N, int marked_dir) {
    std::vector<GammaPoly> gammas;
    for (int i = 0; i <= N; ++i)
        gammas.push_back(solve_gamma(i, data.q));
    PartialSumSeq seq;
    seq.kind = "cone";
    for (int n = 1; n <= N; ++n) {
        Rational entry(0);
        for (int i = 0; i <= n; ++i)
            entry += closed_form_a(n, gammas[static_cast<std::size_t>(i)]) *
                     data.cone_avg(i, n, marked_dir);
        seq.entries.emplace_back(n, entry);
    }
    return seq;
}

PartialSumSeq horocyclic_partial_sums(const TreeFn& f, int N, int marked_dir) {
    HorocycleData d = collect_horocycle_data(f, N, N);
    return horocyclic_partial_sums(d, N, marked_dir);
}

PartialSumSeq horosummability_seq(const TreeFn& f, int N, int marked_dir) {
    PartialSumSeq seq;
    seq.kind = "horosummability";
    for (int n = 1; n <= N; ++n)
        seq.entries.emplace_back(
            n, Rational(int_pow(f.q, static_cast<unsigned long>(n))) *
                   horocycle_avg(f, 2 * n, marked_dir));
    return seq;
}

PartialSumSeq full_boundary_partial_sums(const TreeFn& f, int N) {
    HorocycleData d = collect_horocycle_data(f, N, N);
    CoeffTable table = CoeffTable::build(f.q, N);
    PartialSumSeq seq;
    seq.kind = "full-boundary";
    Rational prefactor(f.q, f.q + 1);
    for (int n = 1; n <= N; ++n) {
        Rational entry(0);
        for (int i = 0; i <= n; ++i)
            entry += table.a(n, i) * d.circle_sum(i, n);
        entry = prefactor * entry / Rational(int_pow(f.q, static_cast<unsigned long>(n)));
        seq.entries.emplace_back(n, entry);
    }
    return seq;
}

CheckReport full_boundary_cross_check(const TreeFn& f, int N) {
    HorocycleData d = collect_horocycle_data(f, N, N);
    CoeffTable table = CoeffTable::build(f.q, N);
    CheckReport rep;
    rep.check = "full_boundary_cross";
    rep.params["q"] = f.q;
    rep.params["N"] = N;
    rep.params["function"] = f.provenance;
    rep.pass = true;

    // Independent path: rebuild the tower with the serial operator and sum
    // circles directly from the stored levels, bypassing the block cache.
    std::vector<std::vector<Rational>> circle(static_cast<std::size_t>(N) + 1);
    {
        TreeFn cur = f;
        for (int i = 0; i <= N; ++i) {
            auto& row = circle[static_cast<std::size_t>(i)];
            for (int n = 0; n <= N; ++n)
                row.push_back(sphere_sum(cur, n));
            if (i < N)
                cur = tree_laplacian_serial(cur);
        }
    }

    Rational prefactor(f.q, f.q + 1);
    for (int n = 1; n <= N && rep.pass; ++n) {
        Rational qn(int_pow(f.q, static_cast<unsigned long>(n)));
        Rational full(0);
        for (int i = 0; i <= n; ++i) {
            const Rational& direct = circle[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
            if (direct != d.circle_sum(i, n)) {
                rep.pass = false;
                rep.params["n"] = n;
                rep.params["mismatch"] = "circle-sum paths disagree";
                break;
            }
            full += table.a(n, i) * direct;
        }
        if (!rep.pass)
            break;
        full = prefactor * full / qn;
        // Each circle vertex lies in q of the q+1 cones, so the per-cone
        // entries oversample the circle q times: (q+1) full = sum of cones.
        Rational cones(0);
        for (long dir = 0; dir <= f.q; ++dir) {
            Rational entry(0);
            for (int i = 0; i <= n; ++i)
                entry += table.a(n, i) * d.cone_avg(i, n, static_cast<int>(dir));
            cones += entry;
        }
        if (full * Rational(f.q + 1) != cones) {
            rep.pass = false;
            rep.params["n"] = n;
            rep.params["full_entry"] = full.str();
            rep.params["cone_sum"] = cones.str();
        }
    }
    return rep;
}

LimitEstimate detect_limit(const std::vector<Rational>& seq) {
    LimitEstimate est;
    std::size_t n = seq.size();
    if (n >= 3 && seq[n - 1] == seq[n - 2] && seq[n - 2] == seq[n - 3]) {
        est.exact = true;
        est.value = seq[n - 1];
        est.method = "constant";
        return est;
    }
    if (n >= 4) {
        Rational d1 = seq[n - 1] - seq[n - 2];
        Rational d2 = seq[n - 2] - seq[n - 3];
        Rational d3 = seq[n - 3] - seq[n - 4];
        if (!d2.is_zero() && !d3.is_zero()) {
            Rational r1 = d1 / d2;
            Rational r2 = d2 / d3;
            if (r1 == r2 && r1.abs() < Rational(1)) {
                est.exact = true;
                est.value = seq[n - 1] + d1 * r1 / (Rational(1) - r1);
                est.method = "geometric";
                return est;
            }
        }
    }
    est.exact = false;
    est.value = n ? seq[n - 1] : Rational(0);
    est.method = "last-entry";
    return est;
}

HolomResult holom_check(const TreeFn& h, int N, double tol, int marked_dir) {
    if (N < 1)
        throw std::invalid_argument("holom_check: N must be >= 1");
    if (!is_harmonic_interior(h))
        throw std::invalid_argument("holom_check: input is not harmonic");
    HorocycleData d = collect_horocycle_data(h, 0, 2 * N);
    if (!d.has(0, 2 * N))
        throw std::invalid_argument("holom_check: radius below 2N");

    HolomResult res;
    for (int n = 0; n <= N; ++n)
        res.A_seq.push_back(d.cone_avg(0, n, marked_dir));
    res.A = detect_limit(res.A_seq);
    for (int n = 1; n <= N; ++n)
        res.B_seq.push_back(Rational(int_pow(h.q, static_cast<unsigned long>(n))) *
                            (res.A_seq[static_cast<std::size_t>(n)] - res.A.value));

    res.identity_pass = true;
    for (int n = 1; n <= N; ++n) {
        Rational qn(int_pow(h.q, static_cast<unsigned long>(n)));
        Rational lhs = d.center + qn * d.cone_avg(0, 2 * n, marked_dir);
        Rational rhs = (Rational(1) + qn) * d.cone_avg(0, n, marked_dir);
        if (lhs != rhs) {
            res.identity_pass = false;
            break;
        }
    }

    Rational recovered = res.A.value + res.B_seq.back();
    if (res.A.exact) {
        res.value_pass = (recovered == d.center);
    } else {
        double err = (recovered - d.center).to_double();
        res.value_pass = std::fabs(err) <= tol;
    }

    res.report.check = "holom";
    res.report.params["q"] = h.q;
    res.report.params["N"] = N;
    res.report.params["function"] = h.provenance;
    res.report.params["limit_method"] = res.A.method;
    res.report.params["A"] = res.A.value.str();
    res.report.pass = res.identity_pass && res.value_pass;
    if (!res.A.exact) {
        std::ostringstream os;
        os.precision(6);
        os << std::scientific << std::fabs((recovered - d.center).to_double());
        res.report.residual = os.str();
    }
    if (!res.report.pass) {
        res.report.params["recovered"] = recovered.str();
        res.report.params["center"] = d.center.str();
    }
    return res;
}

}  // namespace mvp
