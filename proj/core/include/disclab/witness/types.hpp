#pragma once

#include "disclab/discriminator.hpp"
#include "disclab/quad_seq.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace disclab::witness {

/// p^k with p prime and k >= 1.
class PrimePowerTarget {
public:
    PrimePowerTarget(std::int64_t p, int k);

    std::int64_t p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    std::int64_t value() const noexcept { return value_; }

private:
    std::int64_t p_;
    int k_;
    std::int64_t value_;
};

enum class Verdict { characterized, violates, undecided };

const char* to_string(Verdict v) noexcept;

struct Condition {
    int id;
    bool holds;
    std::string statement;
    std::string detail;
    // Moduli that decided the outcome (the offending 2^x or prime for the
    // p = 3 sufficient conditions, for instance).
    std::vector<std::int64_t> moduli;
};

/// alpha = 2^t * r with r odd.
struct TwoAdicSplit {
    int t;
    std::int64_t r;
};

/// alpha = 3c, beta = bc.
struct ThreeSplit {
    std::int64_t b;
    std::int64_t c;
};

struct Classification {
    std::int64_t p = 0;
    Verdict verdict = Verdict::undecided;
    int violated = 0;  // first failing condition id when verdict == violates
    std::vector<Condition> conditions;
    std::optional<TwoAdicSplit> two_adic;
    std::optional<ThreeSplit> three_split;
    bool degenerate = false;  // q(0) == q(1): no modulus discriminates
    std::string note;

    const Condition& condition(int id) const;
};

/// Sets verdict to characterized when every condition holds, otherwise to
/// violates with the first failing id.
void settle(Classification& c);

enum class CounterexampleKind { collision_at_prime_power, smaller_discriminator_exists };

const char* to_string(CounterexampleKind k) noexcept;

enum class CheckMode { exhaustive, inequality_chain_sampled };

struct SmallerDiscriminator {
    std::int64_t r;
    bool verified;
    CheckMode mode;
};

/// Evidence that D(n) != p^ceil(log_p n) for a specific n: either a collision
/// modulo p^ceil(log_p n) among the first n terms, or a smaller modulus r that
/// discriminates them.
struct Counterexample {
    QuadSeq seq;
    std::int64_t p;
    std::int64_t n;
    CounterexampleKind kind;
    std::optional<PairWitness> collision;
    std::optional<SmallerDiscriminator> smaller;
    std::string reason;
};

Counterexample make_collision(const QuadSeq& q, std::int64_t p, std::int64_t n, std::int64_t i,
                              std::int64_t j, std::string reason);
Counterexample make_smaller(const QuadSeq& q, std::int64_t p, std::int64_t n, std::int64_t r,
                            std::string reason);

/// Re-checks a counterexample from scratch with the core operations. The
/// smaller-discriminator kind is checked exhaustively and throws
/// ErrorCode::out_of_range when n exceeds kExhaustiveTerms.
bool verify(const Counterexample& cx);

inline constexpr std::int64_t kExhaustiveTerms = std::int64_t{1} << 24;

/// Throws ErrorCode::internal_contradiction unless the witness verifies.
void ensure_verified(const QuadSeq& q, const PairWitness& w, const char* construction);
void ensure_verified(const Counterexample& cx, const char* construction);

} // namespace disclab::witness
