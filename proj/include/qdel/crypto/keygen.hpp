#pragma once

#include <deque>
#include <vector>

#include "qdel/crypto/pad.hpp"
#include "qdel/random.hpp"
#include "qdel/sim/state_vector.hpp"

namespace qdel::crypto {

struct KeygenResult {
    std::vector<int> bits;
    int rounds = 0;
};

// Fills every free slot with |+>, measures, repeats until `bits_needed`
// bits exist. Throws NoCapacity when free_slots = 0.
KeygenResult protocol1_keygen(int free_slots, int bits_needed, sim::StateVector& workspace,
                              Rng& rng);

enum class KeyMode { Protocol1Literal, PregeneratedPool, ExternalClassical };

// Where pad bits come from. Literal mode measures |+> states on the spot
// (needs free slots); pool mode pre-generates everything up front; external
// mode draws classical random bits. When literal generation is impossible
// (no free slot, empty pool) the source falls back to classical bits and
// counts them, mirroring the single-qubit-client situation.
class KeySource {
  public:
    KeySource(KeyMode mode, Rng rng) : mode_(mode), rng_(rng) {}

    // Pre-generates `bits` pool bits using `slots` measurement slots.
    void pregenerate(int slots, int bits);

    // Opportunistic refill after sends freed client slots (literal mode).
    void refill(int free_slots, int max_bits);

    PadKey take_key(int free_slots);
    std::vector<int> take_bits(int n, int free_slots);

    KeyMode mode() const { return mode_; }
    int pool_size() const { return static_cast<int>(pool_.size()); }
    int generated_bits() const { return generated_; }
    int fallback_bits() const { return fallback_; }

  private:
    KeyMode mode_;
    Rng rng_;
    sim::StateVector workspace_;
    std::deque<int> pool_;
    int generated_ = 0;
    int fallback_ = 0;
};

}  // namespace qdel::crypto
