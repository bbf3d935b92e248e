#include "qdel/crypto/keygen.hpp"

#include "qdel/errors.hpp"
#include "qdel/sim/gate.hpp"

namespace qdel::crypto {

namespace {

// Key workspace labels live far above any circuit label.
constexpr sim::QubitLabel kKeyLabelBase = 1u << 20;

int measure_plus(sim::StateVector& ws, sim::QubitLabel slot, Rng& rng) {
    ws.add_qubit(slot);
    ws.apply(sim::make_gate(sim::GateKind::H, {slot}));
    auto rec = ws.measure_z(slot, rng);
    ws.discard_qubit(slot, rec.outcome);
    return rec.outcome;
}

}  // namespace

KeygenResult protocol1_keygen(int free_slots, int bits_needed, sim::StateVector& workspace,
                              Rng& rng) {
    if (bits_needed < 0) throw BadArgument("protocol1_keygen: negative bit count");
    if (bits_needed > 0 && free_slots <= 0)
        throw NoCapacity("protocol1_keygen: no free client slots for key qubits");
    KeygenResult out;
    while (static_cast<int>(out.bits.size()) < bits_needed) {
        int batch = std::min(free_slots, bits_needed - static_cast<int>(out.bits.size()));
        for (int s = 0; s < batch; ++s)
            out.bits.push_back(measure_plus(workspace, kKeyLabelBase + static_cast<sim::QubitLabel>(s), rng));
        ++out.rounds;
    }
    return out;
}

void KeySource::pregenerate(int slots, int bits) {
    if (mode_ != KeyMode::PregeneratedPool) return;
    auto got = protocol1_keygen(slots, bits, workspace_, rng_);
    generated_ += bits;
    pool_.insert(pool_.end(), got.bits.begin(), got.bits.end());
}

void KeySource::refill(int free_slots, int max_bits) {
    if (mode_ != KeyMode::Protocol1Literal || free_slots <= 0 || max_bits <= 0) return;
    auto got = protocol1_keygen(free_slots, max_bits, workspace_, rng_);
    generated_ += max_bits;
    pool_.insert(pool_.end(), got.bits.begin(), got.bits.end());
}

std::vector<int> KeySource::take_bits(int n, int free_slots) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    while (static_cast<int>(out.size()) < n) {
        if (!pool_.empty()) {
            out.push_back(pool_.front());
            pool_.pop_front();
            continue;
        }
        if (mode_ != KeyMode::ExternalClassical && free_slots > 0) {
            refill(free_slots, n - static_cast<int>(out.size()));
            continue;
        }
        // No quantum capacity left: classical randomness stands in.
        out.push_back(rng_.coin() ? 1 : 0);
        ++fallback_;
    }
    return out;
}

PadKey KeySource::take_key(int free_slots) {
    auto bits = take_bits(2, free_slots);
    return PadKey{bits[0], bits[1]};
}

}  // namespace qdel::crypto
