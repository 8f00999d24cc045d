// Passive-secure multi-party computation simulated on a deterministic round
// scheduler over a multiplicative scheme: input owners share their secrets,
// additions and scalings are local, each multiplication re-shares the local
// share products and recombines them with the scheme's product coefficients,
// and a final round reconstructs the output from all shares.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "agss/gf.hpp"
#include "agss/lsss.hpp"

namespace agss::mpc {

using gf::FieldElement;

// A protocol prerequisite fails (the scheme admits no product recombination
// vector, or the adversary structure is not Q2).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Gate {
  enum class Kind { input, add, mul, scale, output };
  Kind kind = Kind::input;
  std::size_t owner = 0;     // input: owning party, 1-based
  std::size_t a = 0, b = 0;  // operand gate indices
  FieldElement constant;     // scale: multiplier
};

Gate input_gate(std::size_t owner);
Gate add_gate(std::size_t a, std::size_t b);
Gate mul_gate(std::size_t a, std::size_t b);
Gate scale_gate(const FieldElement& constant, std::size_t a);
Gate output_gate(std::size_t a);

// Ordered gate list; operands always point at earlier gates and the single
// output gate sits last.
class Circuit {
 public:
  explicit Circuit(std::vector<Gate> gates);

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t output_wire() const;  // operand of the final gate
  std::size_t multiplication_count() const;
  // 1-based owners of the input gates, in gate order
  std::vector<std::size_t> input_owners() const;

  // Plaintext evaluation on owner-indexed inputs.
  FieldElement evaluate(const std::map<std::size_t, FieldElement>& inputs) const;

 private:
  std::vector<Gate> gates_;
};

struct Message {
  std::size_t round = 0;
  std::size_t from = 0;  // 1-based parties
  std::size_t to = 0;
  std::string tag;       // "input:<gate>", "reshare:<gate>", "output:<gate>"
  std::vector<FieldElement> payload;
};

// Mailbox-per-party message fabric. Sends are buffered and become readable
// only after the round is delivered; the log keeps every message in send
// order and is never rewritten.
class SimNetwork {
 public:
  explicit SimNetwork(std::size_t parties);

  void send(std::size_t from, std::size_t to, std::string tag,
            std::vector<FieldElement> payload);
  void deliver_round();
  // Drains the messages delivered to a party in the last round.
  std::vector<Message> read_mailbox(std::size_t party);

  std::size_t rounds_delivered() const { return round_; }
  const std::vector<Message>& log() const { return log_; }

 private:
  std::size_t parties_;
  std::size_t round_ = 0;
  std::vector<Message> pending_;
  std::vector<std::vector<Message>> mailboxes_;
  std::vector<Message> log_;
};

// One simulated party: its index, one share register per computed wire, and
// its private randomness. A party touches only its own registers and the
// mailbox the network hands it.
struct PartyState {
  std::size_t index = 0;  // 1-based
  std::map<std::size_t, FieldElement> wires;
  rng::DigitSource* randomness = nullptr;
};

struct MpcResult {
  FieldElement output;
  std::vector<Message> transcript;
  std::size_t rounds = 0;
};

// Runs the protocol with per-party randomness derived from the seed.
// Requires a multiplicative scheme whose adversary structure is Q2; inputs
// must cover exactly the input-gate owners.
MpcResult run_passive_mpc(const lsss::Scheme& s, const Circuit& c,
                          const std::map<std::size_t, FieldElement>& inputs,
                          std::uint64_t seed);

struct AuditVerdict {
  bool identical = false;
  // true when every randomness tape was enumerated; false for the sampled
  // fallback, which only compares per-coordinate view distributions
  bool exhaustive = false;
  unsigned long long enumerated = 0;  // tapes (or samples) per input set
};

// Compares the protocol views of the adversary set between two input
// assignments with equal circuit output: every message touching the set plus
// the set's own inputs. Exhausts the joint randomness space when it fits the
// budget, otherwise samples seeded runs.
AuditVerdict adversary_view_audit(
    const lsss::Scheme& s, const Circuit& c,
    const std::vector<std::size_t>& adversary,
    const std::map<std::size_t, FieldElement>& inputs1,
    const std::map<std::size_t, FieldElement>& inputs2,
    long randomness_budget = 1'000'000, std::size_t fallback_samples = 10'000);

}  // namespace agss::mpc
