#pragma once
// Counting Hankel tuples by rank: closed forms, exhaustive counts, a Monte
// Carlo estimator, and the verification driver that compares them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hankel/matrix.hpp"
#include "hankel/ranklaw.hpp"

namespace hankel {

/// Rank tests an exhaustive job may perform unless overridden.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

struct EngineOptions {
    std::uint64_t cap = kDefaultCap;
    unsigned jobs = 1;
};

enum class QueryRange {
    Bounded,        ///< k <= r <= m and r <= n
    SquarePlusOne,  ///< k <= r = m = n + 1
    Outside,  ///< no closed form claimed
};

/// Tuples x in F^{m+n+1} with x_{[0,k)} = prefix, tested for rank H_{m,n}(x) <= r.
class CountQuery {
public:
    CountQuery(int m, int n, int r, SeqTuple prefix);

    const Field& field() const noexcept { return prefix_.field(); }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    const SeqTuple& prefix() const noexcept { return prefix_; }
    int k() const noexcept { return static_cast<int>(prefix_.size()); }
    std::size_t length() const noexcept { return static_cast<std::size_t>(m_ + n_ + 1); }
    std::size_t free_entries() const noexcept { return length() - prefix_.size(); }
    QueryRange range() const noexcept;

private:
    int m_;
    int n_;
    int r_;
    SeqTuple prefix_;
};

struct RankDistribution {
    /// Every rank 0..min(m,n)+1 is present, zero counts included.
    std::map<std::size_t, Count> counts;
    Count total = 0;
};

/// Q^{2r-k} on the Bounded and SquarePlusOne ranges; UsageError elsewhere.
Count count_rank_le_formula(const CountQuery& q);
/// Number of x in F^{m+n+1} with rank H_{m,n}(x) = r. Requires m <= n.
Count count_rank_eq_formula(const Field& field, int m, int n, int r);
/// Q^{2n-k}: prefix-fixed x with det H_{n,n}(x) = 0. Requires k <= n.
Count count_det_zero_formula(const Field& field, int n, int k);
/// Q^{u+v-2}: y with det J_{u,v}(y) = 0. Requires u, v >= 1.
Count count_jt_singular_formula(const Field& field, int u, int v);

/// Throws ResourceError when Q^e exceeds the cap.
void require_within_cap(std::uint32_t q, std::size_t exponent, std::uint64_t cap);

Count brute_count_rank_le(const CountQuery& q, const EngineOptions& opts = {});
RankDistribution brute_census(const Field& field, int m, int n, const SeqTuple& prefix,
                              const EngineOptions& opts = {});
Count brute_count_det_zero(const Field& field, int n, const SeqTuple& prefix,
                           const EngineOptions& opts = {});

enum class JtPath {
    Flip,    ///< det of the Hankel matrix built by jt_to_hankel
    Direct,  ///< det of J_{u,v}(y) itself
};

Count brute_count_jt_singular(const Field& field, int u, int v, const EngineOptions& opts = {},
                              JtPath path = JtPath::Flip);

// Monte Carlo ---------------------------------------------------------------

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Counter-based uniform field elements: word c of stream `key` is
/// mix64(key ^ mix64(c)); its low ceil(log2 Q) bits are accepted when < Q.
class ElementSampler {
public:
    ElementSampler(std::uint32_t order, std::uint64_t key) noexcept;
    Elem next() noexcept;

private:
    std::uint32_t order_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    std::uint64_t mask_;
};

struct McEstimate {
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::optional<double> target;  ///< Q^{2r-(m+n+1)} when a closed form applies

    std::optional<double> z_score() const;
    /// |estimate - target| <= sigmas * stderr (exact equality when stderr = 0).
    bool within(double sigmas) const;
};

inline constexpr double kMonteCarloSigmas = 4.0;

McEstimate monte_carlo_rank_le(const CountQuery& q, std::uint64_t trials, std::uint64_t seed,
                               unsigned jobs = 1);

// Reports -------------------------------------------------------------------

enum class Mode { Formula, Brute, Both, MonteCarlo };
enum class Verdict { Match, Mismatch, Estimate, Unverified, Skipped };

const char* to_string(Mode m) noexcept;
const char* to_string(Verdict v) noexcept;

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct CensusReport {
    std::string suite;   ///< command name, or verify suite
    std::string family;  ///< which relation was checked
    Field field;
    ParamList params;
    Mode mode = Mode::Both;
    std::optional<Count> formula{};
    std::optional<Count> observed{};
    std::optional<McEstimate> estimate{};
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    std::string first_failure{};
    Verdict verdict = Verdict::Unverified;
    std::string note{};
    double elapsed_ms = 0.0;
};

/// Match/Mismatch when both values are known, Unverified otherwise.
Verdict compare(const std::optional<Count>& formula, const std::optional<Count>& observed);

// Verification --------------------------------------------------------------

enum class Suite { Lemmas, Identities, Witnesses, Theorems, Jt };

const char* to_string(Suite s) noexcept;
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

/// Default size bound of a suite for a field of order q. Bounds mean: tuple
/// index N for lemmas; n for identities, witnesses and theorems; u+v-1 for jt.
int default_bound(Suite s, std::uint32_t q);

struct VerifyOptions {
    std::vector<Field> fields;
    std::vector<Suite> suites;
    std::optional<int> max_n;
    EngineOptions engine;
    /// Added to every closed-form value (test hook for the mismatch detector).
    std::int64_t formula_perturbation = 0;
};

std::vector<CensusReport> verify(const VerifyOptions& opts);

}  // namespace hankel
