#include "relvel/lawlab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>
#include <utility>

#include "relvel/einstein.hpp"
#include "relvel/recsym.hpp"

namespace relvel::lawlab {

namespace {

constexpr double kNearParallelMaxAngle = 1e-3;  // radians
constexpr double kNearLightspeedFloor = 0.99;   // fraction of c

// Counter-based generator: every draw sequence is keyed by (seed, index, slot),
// so samples never depend on evaluation order or thread placement.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

SplitMix64 stream(std::uint64_t seed, std::uint64_t index, std::uint64_t slot) {
    return {mix64(mix64(mix64(seed + 0x632be59bd9b4e019ull) ^ index) ^
                  (slot + 0x9e3779b97f4a7c15ull))};
}

// Slots 0..2 feed the per-vector draws; the tuple-shared geometry uses slot 8.
constexpr std::uint64_t kSharedSlot = 8;

CVec3 unit_vector(SplitMix64& g) {
    const double cz = g.uniform(-1.0, 1.0);
    const double phi = g.uniform(0.0, 2.0 * std::numbers::pi);
    const double s = std::sqrt(std::max(0.0, 1.0 - cz * cz));
    return {s * std::cos(phi), s * std::sin(phi), cz};
}

// Orthonormal frame with f0 random; f1, f2 complete it.
void random_frame(SplitMix64& g, CVec3& f0, CVec3& f1, CVec3& f2) {
    f0 = unit_vector(g);
    double n = 0.0;
    CVec3 c1;
    do {
        c1 = cross(f0, unit_vector(g));
        n = norm_hermitian(c1);
    } while (n < 1e-9);
    f1 = (1.0 / n) * c1;
    f2 = cross(f0, f1);
}

double ball_speed(SplitMix64& g, const SamplerConfig& cfg) {
    // density ~ r^2 up to max_beta * c
    return cfg.max_beta * cfg.c.c() * std::cbrt(g.uniform01());
}

double near_lightspeed_speed(SplitMix64& g, const SamplerConfig& cfg) {
    const double lo = std::min(kNearLightspeedFloor, cfg.max_beta);
    return cfg.c.c() * g.uniform(lo, cfg.max_beta);
}

void validate(const SamplerConfig& cfg, int tuple_arity) {
    if (!(cfg.max_beta > 0.0 && cfg.max_beta < 1.0)) {
        throw std::invalid_argument("max_beta must lie strictly between 0 and 1");
    }
    if (tuple_arity < 1 || tuple_arity > 3) {
        throw std::invalid_argument("tuple arity must be 1, 2 or 3");
    }
}

double scalar_defect(CScalar lhs, CScalar rhs, double c) {
    const double scale = std::max({c, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / scale;
}

double vector_defect(const CVec3& lhs, const CVec3& rhs, double c) {
    const double scale = std::max({c, norm_hermitian(lhs), norm_hermitian(rhs)});
    return norm_hermitian(lhs - rhs) / scale;
}

CVec3 compose(OpId op, const CVec3& a, const CVec3& b, LightSpeed ctx) {
    if (op == OpId::einstein) {
        return einstein_add(Velocity(a, ctx), Velocity(b, ctx)).w.vec();
    }
    return rs_add(a, b, ctx).w;
}

CScalar magnitude_of(OpId op, const CVec3& w) {
    return op == OpId::einstein ? CScalar(norm_hermitian(w)) : magnitude_bilinear(w);
}

void validate_combination(LawId law, OpId op, const SamplerConfig& cfg) {
    if (op == OpId::einstein && cfg.regime == Regime::complex_disc) {
        throw std::invalid_argument("einstein addition is defined on real velocities only");
    }
    if (law == LawId::dual_path && op == OpId::einstein) {
        throw std::invalid_argument("dual_path is a recsym-only law");
    }
}

}  // namespace

int arity(LawId law) {
    switch (law) {
        case LawId::identity:
        case LawId::inverse:
            return 1;
        case LawId::associativity:
            return 3;
        default:
            return 2;
    }
}

double default_tol(LawId law) {
    switch (law) {
        case LawId::associativity:
            return 1e-10;
        case LawId::subluminal_closure:
            return 0.5;  // predicate law: defect is 0 or >= 1
        default:
            return 1e-12;
    }
}

std::string to_string(LawId law) {
    switch (law) {
        case LawId::associativity: return "associativity";
        case LawId::commutativity: return "commutativity";
        case LawId::reciprocity: return "reciprocity";
        case LawId::negation_reversed: return "negation_reversed";
        case LawId::negation_same_order: return "negation_same_order";
        case LawId::magnitude_equality: return "magnitude_equality";
        case LawId::magnitude_commutativity: return "magnitude_commutativity";
        case LawId::identity: return "identity";
        case LawId::inverse: return "inverse";
        case LawId::subluminal_closure: return "subluminal_closure";
        case LawId::dual_path: return "dual_path";
    }
    return "?";
}

std::string to_string(OpId op) { return op == OpId::einstein ? "einstein" : "recsym"; }

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::uniform_ball: return "uniform_ball";
        case Regime::near_lightspeed: return "near_lightspeed";
        case Regime::near_parallel: return "near_parallel";
        case Regime::collinear: return "collinear";
        case Regime::orthogonal: return "orthogonal";
        case Regime::complex_disc: return "complex_disc";
    }
    return "?";
}

std::string to_string(Verdict verdict) {
    return verdict == Verdict::holds ? "HOLDS" : "VIOLATED";
}

std::optional<LawId> parse_law_id(const std::string& s) {
    for (auto law : {LawId::associativity, LawId::commutativity, LawId::reciprocity,
                     LawId::negation_reversed, LawId::negation_same_order,
                     LawId::magnitude_equality, LawId::magnitude_commutativity, LawId::identity,
                     LawId::inverse, LawId::subluminal_closure, LawId::dual_path}) {
        if (s == to_string(law)) return law;
    }
    return std::nullopt;
}

std::optional<OpId> parse_op_id(const std::string& s) {
    for (auto op : {OpId::einstein, OpId::recsym}) {
        if (s == to_string(op)) return op;
    }
    return std::nullopt;
}

std::optional<Regime> parse_regime(const std::string& s) {
    for (auto r : {Regime::uniform_ball, Regime::near_lightspeed, Regime::near_parallel,
                   Regime::collinear, Regime::orthogonal, Regime::complex_disc}) {
        if (s == to_string(r)) return r;
    }
    return std::nullopt;
}

std::vector<CVec3> sample_tuple(const SamplerConfig& cfg, std::uint64_t index, int tuple_arity) {
    validate(cfg, tuple_arity);
    const double c = cfg.c.c();
    std::vector<CVec3> out;
    out.reserve(static_cast<std::size_t>(tuple_arity));

    switch (cfg.regime) {
        case Regime::uniform_ball:
        case Regime::near_lightspeed: {
            for (int s = 0; s < tuple_arity; ++s) {
                auto g = stream(cfg.seed, index, static_cast<std::uint64_t>(s));
                const CVec3 dir = unit_vector(g);
                const double r = cfg.regime == Regime::uniform_ball
                                     ? ball_speed(g, cfg)
                                     : near_lightspeed_speed(g, cfg);
                out.push_back(r * dir);
            }
            break;
        }
        case Regime::collinear: {
            auto shared = stream(cfg.seed, index, kSharedSlot);
            const CVec3 dir = unit_vector(shared);
            for (int s = 0; s < tuple_arity; ++s) {
                auto g = stream(cfg.seed, index, static_cast<std::uint64_t>(s));
                const double r = ball_speed(g, cfg);
                const double sign = g.uniform01() < 0.5 ? -1.0 : 1.0;
                out.push_back((sign * r) * dir);
            }
            break;
        }
        case Regime::orthogonal: {
            auto shared = stream(cfg.seed, index, kSharedSlot);
            CVec3 f[3];
            random_frame(shared, f[0], f[1], f[2]);
            for (int s = 0; s < tuple_arity; ++s) {
                auto g = stream(cfg.seed, index, static_cast<std::uint64_t>(s));
                out.push_back(ball_speed(g, cfg) * f[s]);
            }
            break;
        }
        case Regime::near_parallel: {
            auto shared = stream(cfg.seed, index, kSharedSlot);
            CVec3 axis, p, q;
            random_frame(shared, axis, p, q);
            for (int s = 0; s < tuple_arity; ++s) {
                auto g = stream(cfg.seed, index, static_cast<std::uint64_t>(s));
                const double r = ball_speed(g, cfg);
                if (s == 0) {
                    out.push_back(r * axis);
                } else {
                    const double theta = g.uniform(0.0, kNearParallelMaxAngle);
                    const double psi = g.uniform(0.0, 2.0 * std::numbers::pi);
                    const CVec3 dir = std::cos(theta) * axis +
                                      std::sin(theta) * (std::cos(psi) * p + std::sin(psi) * q);
                    out.push_back(r * dir);
                }
            }
            break;
        }
        case Regime::complex_disc: {
            for (int s = 0; s < tuple_arity; ++s) {
                auto g = stream(cfg.seed, index, static_cast<std::uint64_t>(s));
                CVec3 v;
                for (int comp = 0; comp < 3; ++comp) {
                    const double r = std::sqrt(g.uniform01());
                    const double phi = g.uniform(0.0, 2.0 * std::numbers::pi);
                    v[comp] = c * CScalar(r * std::cos(phi), r * std::sin(phi));
                }
                out.push_back(v);
            }
            break;
        }
    }
    return out;
}

std::vector<CVec3> sample(const SamplerConfig& cfg) {
    validate(cfg, 1);
    std::vector<CVec3> out;
    out.reserve(cfg.count);
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        out.push_back(sample_tuple(cfg, i, 1)[0]);
    }
    return out;
}

double defect(LawId law, OpId op, const std::vector<CVec3>& in, LightSpeed ctx) {
    if (static_cast<int>(in.size()) != arity(law)) {
        throw std::invalid_argument("input tuple arity does not match law");
    }
    if (law == LawId::dual_path && op == OpId::einstein) {
        throw std::invalid_argument("dual_path is a recsym-only law");
    }
    const double c = ctx.c();
    const CVec3 zero{};

    switch (law) {
        case LawId::identity:
            return vector_defect(compose(op, in[0], zero, ctx), in[0], c);
        case LawId::inverse:
            return vector_defect(compose(op, -in[0], in[0], ctx), zero, c);
        case LawId::commutativity:
            return vector_defect(compose(op, in[0], in[1], ctx), compose(op, in[1], in[0], ctx),
                                 c);
        case LawId::associativity: {
            const CVec3 lhs = compose(op, compose(op, in[0], in[1], ctx), in[2], ctx);
            const CVec3 rhs = compose(op, in[0], compose(op, in[1], in[2], ctx), ctx);
            return vector_defect(lhs, rhs, c);
        }
        case LawId::reciprocity: {
            // rel(U,V) = (-U) o V must be the exact negative of rel(V,U)
            const CVec3 lhs = compose(op, -in[0], in[1], ctx);
            const CVec3 rhs = -compose(op, -in[1], in[0], ctx);
            return vector_defect(lhs, rhs, c);
        }
        case LawId::negation_reversed:
            return vector_defect(-compose(op, in[0], in[1], ctx),
                                 compose(op, -in[1], -in[0], ctx), c);
        case LawId::negation_same_order:
            return vector_defect(-compose(op, in[0], in[1], ctx),
                                 compose(op, -in[0], -in[1], ctx), c);
        case LawId::magnitude_commutativity:
            return scalar_defect(magnitude_of(op, compose(op, in[0], in[1], ctx)),
                                 magnitude_of(op, compose(op, in[1], in[0], ctx)), c);
        case LawId::magnitude_equality: {
            // cross-law: bilinear magnitude of the RS sum vs Euclidean norm of
            // the Einstein sum on the same (real) pair
            const CScalar lhs = magnitude_bilinear(rs_add(in[0], in[1], ctx).w);
            const Velocity a(in[0], ctx);
            const Velocity b(in[1], ctx);
            const CScalar rhs(norm_hermitian(einstein_add(a, b).w.vec()));
            return scalar_defect(lhs, rhs, c);
        }
        case LawId::subluminal_closure: {
            const CVec3 w = compose(op, in[0], in[1], ctx);
            const double s = op == OpId::einstein ? norm_hermitian(w) / c
                                                  : std::abs(magnitude_bilinear(w)) / c;
            return s < 1.0 ? 0.0 : s;
        }
        case LawId::dual_path: {
            const CVec3 lhs = rs_add(in[0], in[1], ctx).w;
            const PauliQuaternion prod = quat_mul(quat_embed(in[0], ctx), quat_embed(in[1], ctx));
            const CVec3 rhs = quat_project(prod, ctx).w;
            return vector_defect(lhs, rhs, c);
        }
    }
    throw std::invalid_argument("unknown law");
}

namespace {

// Aggregation is folded per fixed-size index block; the merge walks blocks in
// order, so sums, maxima and tie-breaks are bit-identical for any thread count.
constexpr std::uint64_t kBlockSize = 1024;

struct BlockStat {
    double sum = 0.0;
    double max = -1.0;
    std::uint64_t max_index = 0;
    std::uint64_t evaluated = 0;
    std::uint64_t violations = 0;
    std::uint64_t skips = 0;
};

}  // namespace

LawReport check(LawId law, OpId op, const SamplerConfig& cfg, double tol, unsigned threads) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tol must be > 0");
    }
    const int k = arity(law);
    validate(cfg, k);
    validate_combination(law, op, cfg);

    const std::uint64_t n = cfg.count;
    const std::uint64_t nblocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<BlockStat> stats(nblocks);

    auto run_block = [&](std::uint64_t bi) {
        BlockStat st;
        const std::uint64_t lo = bi * kBlockSize;
        const std::uint64_t hi = std::min(n, lo + kBlockSize);
        for (std::uint64_t i = lo; i < hi; ++i) {
            const auto tuple = sample_tuple(cfg, i, k);
            double d = 0.0;
            try {
                d = defect(law, op, tuple, cfg.c);
            } catch (const DegenerateDenominator&) {
                ++st.skips;
                continue;
            }
            ++st.evaluated;
            st.sum += d;
            if (d > tol) ++st.violations;
            if (d > st.max) {
                st.max = d;
                st.max_index = i;
            }
        }
        stats[bi] = st;
    };

    const unsigned nthreads =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(
                                                     1, nblocks))));
    if (nthreads == 1) {
        for (std::uint64_t bi = 0; bi < nblocks; ++bi) run_block(bi);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            try {
                for (std::uint64_t bi = next.fetch_add(1); bi < nblocks; bi = next.fetch_add(1)) {
                    run_block(bi);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    LawReport rep;
    rep.law = law;
    rep.op = op;
    rep.tol = tol;
    double total = 0.0;
    double best = -1.0;
    std::uint64_t best_index = 0;
    for (std::uint64_t bi = 0; bi < nblocks; ++bi) {
        const BlockStat& st = stats[bi];
        total += st.sum;
        rep.samples += st.evaluated;
        rep.violations += st.violations;
        rep.skips += st.skips;
        if (st.max > best) {
            best = st.max;
            best_index = st.max_index;
        }
    }
    if (rep.samples > 0) {
        rep.max_defect = best;
        rep.mean_defect = total / static_cast<double>(rep.samples);
        rep.worst_index = best_index;
        rep.worst_input = sample_tuple(cfg, best_index, k);
    }
    rep.verdict = rep.violations == 0 ? Verdict::holds : Verdict::violated;
    return rep;
}

namespace {

// Halving in rapidity space keeps real iterates subluminal; complex vectors
// whose Hermitian norm reaches c fall back to plain halving.
std::vector<CVec3> halve_rapidities(const std::vector<CVec3>& tuple, double c) {
    auto out = tuple;
    for (auto& v : out) {
        const double s = norm_hermitian(v);
        if (s == 0.0) continue;
        double f = 0.5;
        if (s < c) {
            const double rho = std::atanh(s / c);
            f = c * std::tanh(0.5 * rho) / s;
        }
        v = f * v;
    }
    return out;
}

std::pair<std::vector<CVec3>, std::uint64_t> shrink_tuple(LawId law, OpId op,
                                                          std::vector<CVec3> tuple,
                                                          LightSpeed ctx, double tol) {
    auto still_violates = [&](const std::vector<CVec3>& cand) {
        try {
            return defect(law, op, cand, ctx) > tol;
        } catch (const DegenerateDenominator&) {
            return false;
        }
    };

    constexpr std::uint64_t kMaxSteps = 512;
    std::uint64_t steps = 0;
    bool progressed = true;
    while (progressed && steps < kMaxSteps) {
        progressed = false;

        auto halved = halve_rapidities(tuple, ctx.c());
        if (halved != tuple && still_violates(halved)) {
            tuple = std::move(halved);
            ++steps;
            progressed = true;
            continue;
        }

        for (std::size_t vi = 0; vi < tuple.size() && !progressed; ++vi) {
            for (int comp = 0; comp < 3 && !progressed; ++comp) {
                if (tuple[vi][comp] == CScalar(0.0)) continue;
                auto cand = tuple;
                cand[vi][comp] = CScalar(0.0);
                if (still_violates(cand)) {
                    tuple = std::move(cand);
                    ++steps;
                    progressed = true;
                }
            }
        }
    }
    return {std::move(tuple), steps};
}

}  // namespace

std::optional<Counterexample> hunt_and_shrink(LawId law, OpId op, const SamplerConfig& cfg,
                                              double tol, bool shrink) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tol must be > 0");
    }
    const int k = arity(law);
    validate(cfg, k);
    validate_combination(law, op, cfg);

    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        auto tuple = sample_tuple(cfg, i, k);
        double d = 0.0;
        try {
            d = defect(law, op, tuple, cfg.c);
        } catch (const DegenerateDenominator&) {
            continue;
        }
        if (d <= tol) continue;

        Counterexample ce;
        ce.law = law;
        ce.op = op;
        ce.found_index = i;
        if (shrink) {
            auto [shrunk, steps] = shrink_tuple(law, op, std::move(tuple), cfg.c, tol);
            ce.inputs = std::move(shrunk);
            ce.shrink_steps = steps;
            ce.defect = defect(law, op, ce.inputs, cfg.c);
        } else {
            ce.inputs = std::move(tuple);
            ce.defect = d;
        }
        return ce;
    }
    return std::nullopt;
}

}  // namespace relvel::lawlab
