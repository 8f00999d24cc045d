#include "agss/mpc.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "agss/code.hpp"
#include "agss/rng.hpp"

namespace agss::mpc {

namespace {

uint64_t mix(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_protocol_inputs(const lsss::Scheme& s, const Circuit& c,
                           const std::map<std::size_t, FieldElement>& inputs) {
  const std::size_t n = s.participants();
  std::set<std::size_t> owners;
  for (const Gate& g : c.gates())
    if (g.kind == Gate::Kind::input) {
      if (g.owner > n)
        throw std::invalid_argument("input owner exceeds participant count");
      owners.insert(g.owner);
    }
  for (std::size_t o : owners)
    if (inputs.find(o) == inputs.end())
      throw std::invalid_argument("missing input for party " +
                                  std::to_string(o));
  for (const auto& [o, value] : inputs) {
    if (owners.find(o) == owners.end())
      throw std::invalid_argument("input given for party " +
                                  std::to_string(o) +
                                  " which owns no input gate");
    (void)value;
  }
}

std::vector<FieldElement> checked_witness(const lsss::Scheme& s) {
  auto witness = s.multiplicativity();
  if (!witness)
    throw PreconditionError("scheme has no product recombination vector");
  if (!s.minimal_access_structure().is_Q2())
    throw PreconditionError("adversary structure is not Q2");
  return *witness;
}

// One full protocol execution with caller-supplied randomness, preconditions
// already checked.
MpcResult run_protocol(const lsss::Scheme& s, const Circuit& c,
                       const std::map<std::size_t, FieldElement>& inputs,
                       const std::vector<FieldElement>& witness,
                       const std::vector<rng::DigitSource*>& sources) {
  const std::size_t n = s.participants();
  SimNetwork net(n);
  std::vector<PartyState> parties(n);
  for (std::size_t i = 0; i < n; ++i) {
    parties[i].index = i + 1;
    parties[i].randomness = sources[i];
  }

  auto broadcast_shares = [&](std::size_t from, const std::string& tag,
                              const FieldElement& value) {
    auto sv = s.share_with(value, *parties[from - 1].randomness);
    for (std::size_t to = 1; to <= n; ++to)
      net.send(from, to, tag, {sv.shares[to - 1]});
  };

  const auto& gates = c.gates();

  // input round: one sharing per input gate, gate order
  std::vector<std::size_t> input_gates;
  for (std::size_t g = 0; g < gates.size(); ++g)
    if (gates[g].kind == Gate::Kind::input) {
      input_gates.push_back(g);
      broadcast_shares(gates[g].owner, "input:" + std::to_string(g),
                       inputs.at(gates[g].owner));
    }
  net.deliver_round();
  for (PartyState& p : parties) {
    auto box = net.read_mailbox(p.index);
    for (std::size_t j = 0; j < input_gates.size(); ++j)
      p.wires.insert_or_assign(input_gates[j], box[j].payload[0]);
  }

  FieldElement output;
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    switch (gate.kind) {
      case Gate::Kind::input:
        break;
      case Gate::Kind::add:
        for (PartyState& p : parties)
          p.wires.insert_or_assign(g, p.wires.at(gate.a) + p.wires.at(gate.b));
        break;
      case Gate::Kind::scale:
        for (PartyState& p : parties)
          p.wires.insert_or_assign(g, gate.constant * p.wires.at(gate.a));
        break;
      case Gate::Kind::mul: {
        const std::string tag = "reshare:" + std::to_string(g);
        for (PartyState& p : parties)
          broadcast_shares(p.index, tag,
                           p.wires.at(gate.a) * p.wires.at(gate.b));
        net.deliver_round();
        for (PartyState& p : parties) {
          auto box = net.read_mailbox(p.index);
          FieldElement acc = witness[0] * box[0].payload[0];
          for (std::size_t i = 1; i < n; ++i)
            acc += witness[i] * box[i].payload[0];
          p.wires.insert_or_assign(g, acc);
        }
        break;
      }
      case Gate::Kind::output: {
        const std::string tag = "output:" + std::to_string(g);
        for (PartyState& p : parties)
          for (std::size_t to = 1; to <= n; ++to)
            net.send(p.index, to, tag, {p.wires.at(gate.a)});
        net.deliver_round();
        auto box = net.read_mailbox(1);
        std::vector<std::size_t> everyone(n);
        std::vector<FieldElement> shares;
        shares.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          everyone[i] = i + 1;
          shares.push_back(box[i].payload[0]);
        }
        output = s.reconstruct(everyone, shares);
        break;
      }
    }
  }
  return {output, net.log(), net.rounds_delivered()};
}

// Everything the adversary set sees, flattened: its own inputs, then every
// logged message it sent or received.
std::vector<long> view_of(const std::vector<std::size_t>& adversary,
                          const std::map<std::size_t, FieldElement>& inputs,
                          const MpcResult& run) {
  std::vector<long> view;
  for (std::size_t p : adversary) {
    auto it = inputs.find(p);
    if (it != inputs.end()) view.push_back(it->second.index());
  }
  for (const Message& m : run.transcript) {
    const bool touches =
        std::find(adversary.begin(), adversary.end(), m.from) !=
            adversary.end() ||
        std::find(adversary.begin(), adversary.end(), m.to) != adversary.end();
    if (!touches) continue;
    view.push_back(static_cast<long>(m.round));
    view.push_back(static_cast<long>(m.from));
    view.push_back(static_cast<long>(m.to));
    for (const FieldElement& e : m.payload) view.push_back(e.index());
  }
  return view;
}

}  // namespace

Gate input_gate(std::size_t owner) {
  Gate g;
  g.kind = Gate::Kind::input;
  g.owner = owner;
  return g;
}

Gate add_gate(std::size_t a, std::size_t b) {
  Gate g;
  g.kind = Gate::Kind::add;
  g.a = a;
  g.b = b;
  return g;
}

Gate mul_gate(std::size_t a, std::size_t b) {
  Gate g;
  g.kind = Gate::Kind::mul;
  g.a = a;
  g.b = b;
  return g;
}

Gate scale_gate(const FieldElement& constant, std::size_t a) {
  Gate g;
  g.kind = Gate::Kind::scale;
  g.constant = constant;
  g.a = a;
  return g;
}

Gate output_gate(std::size_t a) {
  Gate g;
  g.kind = Gate::Kind::output;
  g.a = a;
  return g;
}

Circuit::Circuit(std::vector<Gate> gates) : gates_(std::move(gates)) {
  if (gates_.empty()) throw std::invalid_argument("circuit has no gates");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    const bool last = i + 1 == gates_.size();
    auto earlier = [&](std::size_t op) {
      if (op >= i)
        throw std::invalid_argument(
            "gate operand must reference an earlier gate");
    };
    switch (g.kind) {
      case Gate::Kind::input:
        if (g.owner == 0)
          throw std::invalid_argument("input gate needs a 1-based owner");
        break;
      case Gate::Kind::add:
      case Gate::Kind::mul:
        earlier(g.a);
        earlier(g.b);
        break;
      case Gate::Kind::scale:
        earlier(g.a);
        break;
      case Gate::Kind::output:
        earlier(g.a);
        if (!last)
          throw std::invalid_argument("output gate must be last");
        break;
    }
    if (last && g.kind != Gate::Kind::output)
      throw std::invalid_argument("last gate must be the output");
  }
}

std::size_t Circuit::output_wire() const { return gates_.back().a; }

std::size_t Circuit::multiplication_count() const {
  std::size_t m = 0;
  for (const Gate& g : gates_)
    if (g.kind == Gate::Kind::mul) ++m;
  return m;
}

std::vector<std::size_t> Circuit::input_owners() const {
  std::vector<std::size_t> owners;
  for (const Gate& g : gates_)
    if (g.kind == Gate::Kind::input) owners.push_back(g.owner);
  return owners;
}

FieldElement Circuit::evaluate(
    const std::map<std::size_t, FieldElement>& inputs) const {
  std::vector<FieldElement> v(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    switch (g.kind) {
      case Gate::Kind::input: {
        auto it = inputs.find(g.owner);
        if (it == inputs.end())
          throw std::invalid_argument("missing input for party " +
                                      std::to_string(g.owner));
        v[i] = it->second;
        break;
      }
      case Gate::Kind::add:
        v[i] = v[g.a] + v[g.b];
        break;
      case Gate::Kind::mul:
        v[i] = v[g.a] * v[g.b];
        break;
      case Gate::Kind::scale:
        v[i] = g.constant * v[g.a];
        break;
      case Gate::Kind::output:
        v[i] = v[g.a];
        break;
    }
  }
  return v.back();
}

SimNetwork::SimNetwork(std::size_t parties)
    : parties_(parties), mailboxes_(parties) {
  if (parties == 0)
    throw std::invalid_argument("network needs at least one party");
}

void SimNetwork::send(std::size_t from, std::size_t to, std::string tag,
                      std::vector<FieldElement> payload) {
  if (from < 1 || from > parties_ || to < 1 || to > parties_)
    throw std::invalid_argument("party index out of range");
  Message m{round_ + 1, from, to, std::move(tag), std::move(payload)};
  log_.push_back(m);
  pending_.push_back(std::move(m));
}

void SimNetwork::deliver_round() {
  ++round_;
  for (Message& m : pending_) mailboxes_[m.to - 1].push_back(std::move(m));
  pending_.clear();
}

std::vector<Message> SimNetwork::read_mailbox(std::size_t party) {
  if (party < 1 || party > parties_)
    throw std::invalid_argument("party index out of range");
  std::vector<Message> out = std::move(mailboxes_[party - 1]);
  mailboxes_[party - 1] = {};
  return out;
}

MpcResult run_passive_mpc(const lsss::Scheme& s, const Circuit& c,
                          const std::map<std::size_t, FieldElement>& inputs,
                          std::uint64_t seed) {
  check_protocol_inputs(s, c, inputs);
  const std::vector<FieldElement> witness = checked_witness(s);
  const std::size_t n = s.participants();
  std::vector<std::unique_ptr<rng::SeededSource>> owned;
  std::vector<rng::DigitSource*> sources;
  for (std::size_t i = 1; i <= n; ++i) {
    owned.push_back(std::make_unique<rng::SeededSource>(mix(seed, i)));
    sources.push_back(owned.back().get());
  }
  return run_protocol(s, c, inputs, witness, sources);
}

AuditVerdict adversary_view_audit(
    const lsss::Scheme& s, const Circuit& c,
    const std::vector<std::size_t>& adversary,
    const std::map<std::size_t, FieldElement>& inputs1,
    const std::map<std::size_t, FieldElement>& inputs2,
    long randomness_budget, std::size_t fallback_samples) {
  check_protocol_inputs(s, c, inputs1);
  check_protocol_inputs(s, c, inputs2);
  s.is_qualified(adversary);
  if (c.evaluate(inputs1) != c.evaluate(inputs2))
    throw std::invalid_argument(
        "input assignments disagree on the circuit output");
  const std::vector<FieldElement> witness = checked_witness(s);

  const std::size_t n = s.participants();
  std::vector<std::size_t> sorted_adversary = adversary;
  std::sort(sorted_adversary.begin(), sorted_adversary.end());
  sorted_adversary.erase(
      std::unique(sorted_adversary.begin(), sorted_adversary.end()),
      sorted_adversary.end());

  // digits drawn per party: one sharing per owned input gate plus one
  // re-sharing per multiplication, each consuming dimension - 1 digits
  const uint32_t q = static_cast<uint32_t>(s.field().order());
  const std::size_t per_sharing = s.sharing_code().dimension() - 1;
  const std::size_t muls = c.multiplication_count();
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t owner : c.input_owners()) digits[owner - 1] += per_sharing;
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    digits[i] += per_sharing * muls;
    total += digits[i];
  }

  if (code::power_within(q, static_cast<long>(total), randomness_budget)) {
    std::vector<uint32_t> tape(total, 0);
    auto run_side = [&](const std::map<std::size_t, FieldElement>& in) {
      std::vector<std::unique_ptr<rng::TapeSource>> tapes;
      std::vector<rng::DigitSource*> srcs;
      std::size_t off = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tapes.push_back(std::make_unique<rng::TapeSource>(std::vector<uint32_t>(
            tape.begin() + off, tape.begin() + off + digits[i])));
        srcs.push_back(tapes.back().get());
        off += digits[i];
      }
      return run_protocol(s, c, in, witness, srcs);
    };

    std::vector<std::vector<long>> views1, views2;
    unsigned long long count = 0;
    for (;;) {
      views1.push_back(view_of(sorted_adversary, inputs1, run_side(inputs1)));
      views2.push_back(view_of(sorted_adversary, inputs2, run_side(inputs2)));
      ++count;
      std::size_t j = 0;
      while (j < total && ++tape[j] == q) tape[j++] = 0;
      if (j == total) break;
    }
    std::sort(views1.begin(), views1.end());
    std::sort(views2.begin(), views2.end());
    return {views1 == views2, true, count};
  }

  // sampled fallback: seeded runs per side, then per-coordinate view
  // histograms compared in total variation distance
  auto sample_side = [&](uint64_t side,
                         const std::map<std::size_t, FieldElement>& in,
                         std::size_t t) {
    std::vector<std::unique_ptr<rng::SeededSource>> owned;
    std::vector<rng::DigitSource*> srcs;
    for (std::size_t i = 1; i <= n; ++i) {
      owned.push_back(
          std::make_unique<rng::SeededSource>(mix(mix(side, t), i)));
      srcs.push_back(owned.back().get());
    }
    return view_of(sorted_adversary, in, run_protocol(s, c, in, witness, srcs));
  };

  std::vector<std::vector<long>> views1, views2;
  views1.reserve(fallback_samples);
  views2.reserve(fallback_samples);
  for (std::size_t t = 0; t < fallback_samples; ++t) {
    views1.push_back(sample_side(1, inputs1, t));
    views2.push_back(sample_side(2, inputs2, t));
  }
  bool identical = !views1.empty() && views1[0].size() == views2[0].size();
  if (identical) {
    const std::size_t width = views1[0].size();
    for (std::size_t j = 0; j < width && identical; ++j) {
      std::map<long, long> h1, h2;
      for (const auto& v : views1) ++h1[v[j]];
      for (const auto& v : views2) ++h2[v[j]];
      long diff = 0;
      for (const auto& [value, count1] : h1) {
        auto it = h2.find(value);
        diff += std::abs(count1 - (it == h2.end() ? 0 : it->second));
      }
      for (const auto& [value, count2] : h2)
        if (h1.find(value) == h1.end()) diff += count2;
      identical = diff <= static_cast<long>(fallback_samples) / 10;
    }
  }
  return {identical, false, static_cast<unsigned long long>(fallback_samples)};
}

}  // namespace agss::mpc
