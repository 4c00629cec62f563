#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/e8.hpp"
#include "delpezzo/kclass.hpp"

namespace delpezzo {

enum class SlopeLetter { M, R };

// Word over {M, R}; on (d, r) the letters act by M: (d, r) -> (d, -d-r) and
// R: (d, r) -> (-d-4r, r) (degree-4 laws).  |d+2r| is invariant.
struct SlopeWord {
    std::vector<SlopeLetter> letters;
    std::string str() const;
};

enum class SlopeWindow { MinusTwoToMinusOne, MinusThreeHalvesToMinusOne };

struct SlopeNormalization {
    SlopeWord word;
    long long d = 0, r = 0;   // replayed pair; d/r lies in the target window
};

// Drives d/r into the target window using the translation nu -> nu + 1
// (nu = 1/(mu+2)) realized as the two-letter word [R, M], its inverse [M, R],
// and at most one leading R sign fix (needed exactly when d + 2r = -1).
// Requires gcd(d, r) = 1, r > 0 and d + 2r != 0.
SlopeNormalization slope_normalize(long long d, long long r, SlopeWindow target);

// Replay helper: apply one letter to a signed (d, r) pair.
void apply_slope_letter(SlopeLetter l, long long& d, long long& r);

enum class StepKind { Base, SlopeM, SlopeR, Inductive };
std::string step_kind_name(StepKind k);

// Payload certifying one inductive move: the blowdown-changing Weyl word
// (replayed linearly on the degree-1 Picard lattice), the integral twist in
// Q1-perp, and the parity of the shift normalizing the rank sign.
struct InductivePayload {
    WeylWord weyl_word;
    PicardClass twist;
    int shift_parity = 1;
};

// One elementary move.  Chain states are always presented with positive rank;
// parity records whether an odd shift was folded into the step.
struct ChainStep {
    StepKind kind = StepKind::Base;
    KClass before;
    KClass after;
    int parity = 0;
    std::optional<InductivePayload> payload;
};

// Machine-checkable derivation from the base pair (rank 1, c1 = D_{-1,-1})
// to a target class; verified step by step by verify_chain.
struct DerivationChain {
    std::vector<ChainStep> steps;
    const KClass& endpoint() const { return steps.back().after; }
    std::string str() const;   // documented tree-structured text format
};

// Constructs the chain realizing the degree-4 exceptional pair with rank r,
// degree d (gcd(d, r) = 1, r > 0): slope normalization into [-3/2, -1),
// then the inductive move pulled back to degree 1, iterated down to the base
// case d + 2r = 0 and replayed forward.
DerivationChain construct_pair(long long d, long long r);

struct ChainCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct ChainReport {
    std::vector<ChainCheck> checks;
    bool ok() const;
    std::string first_failure() const;
};

// Re-derives every transition of the chain from the transformation laws:
// M/R laws, exceptional consistency and coprimality at every state, and for
// inductive steps the Weyl word validity, the twist lying in Q1-perp, the
// vanishing of the blown-up coefficients after descent, and the slope law
// mu' = -2 - 1/mu.  Endpoint claims are checked against the W(D5) canonical
// form of D_{d+r,-r}.
ChainReport verify_chain(const DerivationChain& chain);

}  // namespace delpezzo
