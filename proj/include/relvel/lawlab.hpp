#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relvel/algebra3.hpp"

namespace relvel::lawlab {

enum class OpId { einstein, recsym };

/// Sampling regimes. Velocity regimes produce real vectors with norm
/// <= max_beta * c; complex_disc produces vectors whose components are drawn
/// from the complex unit disc (times c). collinear / orthogonal / near_parallel
/// constrain the geometry of the whole tuple.
enum class Regime {
    uniform_ball,     // direction uniform on the sphere, speed density ~ r^2
    near_lightspeed,  // speeds in [0.99, max_beta] * c
    near_parallel,    // directions within 1e-3 rad of a shared axis
    collinear,        // all vectors on one line (signed speeds)
    orthogonal,       // tuple directions mutually perpendicular
    complex_disc,     // complex components, each in the unit disc * c
};

/// The law catalogue. Every member maps to exactly one defect functional over
/// the chosen composition op (einstein or recsym):
///
///   identity               a o 0 = a
///   inverse                (-a) o a = 0
///   commutativity          a o b = b o a
///   associativity          (a o b) o c = a o (b o c)
///   reciprocity            rel(U,V) = -rel(V,U)  with rel(p,q) = (-p) o q
///   negation_reversed      -(a o b) = (-b) o (-a)
///   negation_same_order    -(a o b) = (-a) o (-b)
///   magnitude_commutativity |a o b| = |b o a|   (the op's own magnitude)
///   magnitude_equality     |rs(a,b)|_bilinear = ||einstein(a,b)||  (cross-law;
///                          the op tag is accepted but does not change it)
///   subluminal_closure     ||a o b|| < c strictly (predicate law: defect is 0
///                          when it holds and >= 1 when it does not)
///   dual_path              rs_add = project(embed(a) * embed(b))  (recsym only)
enum class LawId {
    associativity,
    commutativity,
    reciprocity,
    negation_reversed,
    negation_same_order,
    magnitude_equality,
    magnitude_commutativity,
    identity,
    inverse,
    subluminal_closure,
    dual_path,
};

enum class Verdict { holds, violated };

struct SamplerConfig {
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
    LightSpeed c{1.0};
    double max_beta = 0.999;  // speed cap as fraction of c, in (0,1)
    Regime regime = Regime::uniform_ball;
};

/// Number of vectors the law's defect functional consumes (1, 2 or 3).
int arity(LawId law);

/// Per-law default tolerance: 1e-10 for associativity (three chained divisions
/// amplify rounding), 0.5 for the predicate-style closure law, 1e-12 otherwise.
double default_tol(LawId law);

std::string to_string(LawId law);
std::string to_string(OpId op);
std::string to_string(Regime regime);
std::string to_string(Verdict verdict);
std::optional<LawId> parse_law_id(const std::string& s);
std::optional<OpId> parse_op_id(const std::string& s);
std::optional<Regime> parse_regime(const std::string& s);

/// The i-th tuple of the stream defined by cfg. Every vector is derived from
/// (seed, index, slot) alone, so the stream is identical however the indices
/// are partitioned across threads. Throws std::invalid_argument for a bad cfg
/// or arity outside 1..3.
std::vector<CVec3> sample_tuple(const SamplerConfig& cfg, std::uint64_t index, int arity);

/// Flat sample stream: element i equals sample_tuple(cfg, i, 1)[0].
std::vector<CVec3> sample(const SamplerConfig& cfg);

/// Normalized residual of `law` on one input tuple:
///   defect = ||lhs - rhs||_H / max(c, ||lhs||_H, ||rhs||_H)
/// (complex modulus instead of Hermitian norm for scalar-valued laws). Zero
/// means the law holds exactly on this tuple. Propagates DegenerateDenominator
/// when a composition inside the functional is singular.
double defect(LawId law, OpId op, const std::vector<CVec3>& inputs, LightSpeed c);

struct LawReport {
    LawId law{};
    OpId op{};
    std::uint64_t samples = 0;  // tuples evaluated (skips excluded)
    std::uint64_t skips = 0;    // tuples rejected by DegenerateDenominator
    std::uint64_t violations = 0;
    double max_defect = 0.0;
    double mean_defect = 0.0;
    double tol = 0.0;
    std::vector<CVec3> worst_input;  // empty when nothing was evaluated
    std::uint64_t worst_index = 0;
    Verdict verdict = Verdict::holds;
};

/// Evaluate `law` on cfg.count sampled tuples and aggregate. Deterministic
/// given cfg: the report is bit-identical for any `threads` value (defects are
/// folded per fixed-size index block, and the worst sample ties break toward
/// the lowest index). Throws std::invalid_argument for invalid law/op/regime
/// combinations (einstein over complex_disc, dual_path over einstein) or
/// tol <= 0.
LawReport check(LawId law, OpId op, const SamplerConfig& cfg, double tol, unsigned threads = 1);

struct Counterexample {
    LawId law{};
    OpId op{};
    std::vector<CVec3> inputs;
    double defect = 0.0;
    std::uint64_t shrink_steps = 0;
    std::uint64_t found_index = 0;  // sample index the hunt first tripped on
};

/// Scan the sample stream in index order for the first tuple with
/// defect > tol, then greedily shrink it: repeatedly halve every vector's
/// rapidity atanh(||v||/c) and try zeroing single components, keeping a step
/// only while the defect stays above tol. Returns nullopt when cfg.count
/// samples produce no violation.
std::optional<Counterexample> hunt_and_shrink(LawId law, OpId op, const SamplerConfig& cfg,
                                              double tol, bool shrink = true);

}  // namespace relvel::lawlab
