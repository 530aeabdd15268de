// Copyright 2026 The superchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Placement supermaps (basic, parallel, sequential, layered networks,
// SWITCH, superposition of trajectories), party supermaps, SDPP circuits,
// assisted supermaps, discarding, and causal-poset validation.
//
// System ordering is fixed: message factor(s) first, then control qubits
// (order / path / C / D) last, in the order they are introduced.

#ifndef SUPERCHAN_SUPERMAPS_HPP
#define SUPERCHAN_SUPERMAPS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "superchan/channels.hpp"
#include "superchan/vacuum.hpp"

namespace superchan {

class IndexError : public Error {
 public:
  using Error::Error;
};

//=========================================================================
// Placed processes
//=========================================================================

struct Location {
  std::string from;
  std::string to;
  friend bool operator==(const Location&, const Location&) = default;
};

// Channels placed between parties. Each step is a layer of channels placed
// in parallel between the same pair of parties; steps run in causal order.
// The placement isomorphisms are identities, so placement is metadata on
// top of the product channel. Invariant: the product passes comb_check for
// the declared step order.
class PlacedProcess {
 public:
  PlacedProcess(std::vector<std::vector<Channel>> layers, std::vector<Location> locations)
      : layers_(std::move(layers)), locations_(std::move(locations)) {
    if (layers_.empty()) throw DimensionError("placed process needs at least one step");
    if (layers_.size() != locations_.size())
      throw DimensionError("one location per step required");
    std::vector<Channel> step_channels;
    std::vector<StepDims> dims;
    for (const auto& layer : layers_) {
      if (layer.empty()) throw DimensionError("empty placement layer");
      step_channels.push_back(tensor(layer));
      dims.push_back({step_channels.back().dim_in(), step_channels.back().dim_out()});
    }
    steps_ = std::move(step_channels);
    process_.emplace(tensor(steps_), std::move(dims));
    if (!comb_check(*process_))
      throw ValidationError("placed process violates the comb causality conditions");
  }

  const MultiPartiteChannel& process() const noexcept { return *process_; }
  const Channel& channel() const noexcept { return process_->channel(); }
  const std::vector<Channel>& steps() const noexcept { return steps_; }
  const std::vector<std::vector<Channel>>& layers() const noexcept { return layers_; }
  const std::vector<Location>& locations() const noexcept { return locations_; }
  std::size_t step_count() const noexcept { return steps_.size(); }

  /// Every placed channel as its own party, for no-signalling checks.
  MultiPartiteChannel as_parties() const {
    std::vector<Channel> all;
    std::vector<StepDims> dims;
    for (const auto& layer : layers_)
      for (const auto& c : layer) {
        all.push_back(c);
        dims.push_back({c.dim_in(), c.dim_out()});
      }
    return MultiPartiteChannel(tensor(all), std::move(dims));
  }

 private:
  std::vector<std::vector<Channel>> layers_;
  std::vector<Location> locations_;
  std::vector<Channel> steps_;
  std::optional<MultiPartiteChannel> process_;
};

inline PlacedProcess basic_place(const Channel& n, std::string from, std::string to) {
  return PlacedProcess({{n}}, {{std::move(from), std::move(to)}});
}

inline PlacedProcess parallel_place(const std::vector<Channel>& ns, std::string sender,
                                    std::string receiver) {
  return PlacedProcess({ns}, {{std::move(sender), std::move(receiver)}});
}

/// Layer i sits between chain[i] and chain[i+1].
inline PlacedProcess layered_place(std::vector<std::vector<Channel>> layers,
                                   const std::vector<std::string>& chain) {
  if (chain.size() != layers.size() + 1)
    throw DimensionError("party chain must have one more entry than steps");
  std::vector<Location> locs;
  for (std::size_t i = 0; i < layers.size(); ++i) locs.push_back({chain[i], chain[i + 1]});
  return PlacedProcess(std::move(layers), std::move(locs));
}

inline PlacedProcess sequential_place(const std::vector<Channel>& ns,
                                      const std::vector<std::string>& chain) {
  std::vector<std::vector<Channel>> layers;
  for (const auto& n : ns) layers.push_back({n});
  return layered_place(std::move(layers), chain);
}

/// D ∘ C_k ∘ R_{k-1} ∘ ... ∘ R_1 ∘ C_1 ∘ E.
inline Channel insert_party_ops(const PlacedProcess& p, const Channel& e,
                                const std::vector<Channel>& reps, const Channel& d) {
  if (reps.size() + 1 != p.step_count())
    throw DimensionError("insert_party_ops: need " + std::to_string(p.step_count() - 1) +
                         " repeaters, got " + std::to_string(reps.size()));
  Channel acc = compose(p.steps().front(), e);
  for (std::size_t i = 0; i < reps.size(); ++i)
    acc = compose(p.steps()[i + 1], compose(reps[i], acc));
  return compose(d, acc);
}

//=========================================================================
// Coherent placements
//=========================================================================

namespace detail {

inline void require_qubit_state(const DensityMatrix& s, std::string_view what) {
  if (s.dim() != 2)
    throw DimensionError(std::string(what) + " must be a qubit state");
}

// Appends a fixed state as a last factor: X -> X ⊗ s, Kraus I ⊗ sqrt(l)|v>.
inline std::vector<CMatrix> append_state_kraus(std::size_t d, const DensityMatrix& s) {
  const auto eig = hermitian_eigs(s.matrix());
  std::vector<CMatrix> out;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) <= kKrausEigenCutoff) continue;
    const CMatrix col = std::sqrt(eig.values(k)) * eig.vectors.col(k);
    out.push_back(kron(CMatrix::Identity(d, d), col));
  }
  return out;
}

}  // namespace detail

/// Channel appending a fixed state as the last tensor factor.
inline Channel append_state(std::size_t d, const DensityMatrix& s) {
  return Channel::from_kraus(detail::append_state_kraus(d, s));
}

/// Quantum SWITCH: Kraus S_ij = N2_i N1_j ⊗ |0><0| + N1_j N2_i ⊗ |1><1|
/// acting on rho ⊗ omega. Output is message ⊗ order qubit; |0> runs N1
/// first.
inline Channel switch_place(const Channel& n1, const Channel& n2, const DensityMatrix& omega) {
  const std::size_t d = n1.dim_in();
  if (n1.dim_out() != d || n2.dim_in() != d || n2.dim_out() != d)
    throw DimensionError("switch_place: channels must share one square dimension");
  detail::require_qubit_state(omega, "switch_place: order state");
  const CMatrix p0 = matrix_unit(2, 0, 0), p1 = matrix_unit(2, 1, 1);
  const auto prep = detail::append_state_kraus(d, omega);
  std::vector<CMatrix> kraus;
  for (const auto& a : n2.kraus())
    for (const auto& b : n1.kraus()) {
      const CMatrix s = kron(a * b, p0) + kron(b * a, p1);
      for (const auto& w : prep) kraus.push_back(s * w);
    }
  return Channel::from_kraus(std::move(kraus));
}

/// Superposition of trajectories. With path basis |1>,|2> at indices 0,1:
///   w11 N1(rho) ⊗ |1><1| + w22 N2(rho) ⊗ |2><2|
///   + w12 F1 rho F2^dagger ⊗ |1><2| + w21 F2 rho F1^dagger ⊗ |2><1|.
/// Output is message ⊗ path qubit. CPTP is checked on the Choi operator;
/// a failure there signals an inconsistent extension pair.
inline Channel superposition_place(const VacuumExtendedChannel& v1,
                                   const VacuumExtendedChannel& v2,
                                   const DensityMatrix& omega) {
  const std::size_t d = v1.dim();
  if (v2.dim() != d) throw DimensionError("superposition_place: base dimensions differ");
  detail::require_qubit_state(omega, "superposition_place: path state");
  const CMatrix f1 = interference_operator(v1);
  const CMatrix f2 = interference_operator(v2);
  const CMatrix& w = omega.matrix();
  auto map = [&](const CMatrix& x) {
    return CMatrix(w(0, 0) * kron(v1.base()(x), matrix_unit(2, 0, 0)) +
                   w(1, 1) * kron(v2.base()(x), matrix_unit(2, 1, 1)) +
                   w(0, 1) * kron(f1 * x * f2.adjoint(), matrix_unit(2, 0, 1)) +
                   w(1, 0) * kron(f2 * x * f1.adjoint(), matrix_unit(2, 1, 0)));
  };
  return channel_from_map(map, d, 2 * d);
}

//=========================================================================
// SDPP circuits
//=========================================================================

namespace gates {

/// CNOT with control C (second factor) and target M (first factor).
inline CMatrix cnot_mc() {
  return kron(qubit::I(), matrix_unit(2, 0, 0)) + kron(qubit::X(), matrix_unit(2, 1, 1));
}

/// On M ⊗ C ⊗ D: CNOT_MC ⊗ I_D.
inline CMatrix cnot_mc_on_mcd() { return kron(cnot_mc(), qubit::I()); }

/// On M ⊗ C ⊗ D: controlled-Z between M and D, identity on C.
inline CMatrix cphase_md_on_mcd() {
  return kron({qubit::I(), qubit::I(), matrix_unit(2, 0, 0)}) +
         kron({qubit::Z(), qubit::I(), matrix_unit(2, 1, 1)});
}

}  // namespace gates

namespace detail {

inline void require_qubit_channel(const Channel& c, std::string_view what) {
  if (c.dim_in() != 2 || c.dim_out() != 2)
    throw DimensionError(std::string(what) + " requires qubit channels");
}

}  // namespace detail

/// F(N1,N2)(rho) = [(N2∘N1) ⊗ I_C] CNOT (rho ⊗ |+><+|) CNOT; output M ⊗ C.
inline Channel sdpp_f(const Channel& n1, const Channel& n2) {
  detail::require_qubit_channel(n1, "sdpp_f");
  detail::require_qubit_channel(n2, "sdpp_f");
  const CMatrix front = gates::cnot_mc() * kron(qubit::I(), CMatrix(qubit::plus()));
  std::vector<CMatrix> kraus;
  for (const auto& a : n2.kraus())
    for (const auto& b : n1.kraus()) kraus.push_back(kron(a * b, qubit::I()) * front);
  return Channel::from_kraus(std::move(kraus));
}

/// G(N1,N2)(rho) = [(N2∘N1) ⊗ I_C ⊗ I_D] CPHASE_MD CNOT_MC (rho ⊗ omega ⊗ xi);
/// output M ⊗ C ⊗ D.
inline Channel sdpp_g(const Channel& n1, const Channel& n2, const DensityMatrix& omega,
                      const DensityMatrix& xi) {
  detail::require_qubit_channel(n1, "sdpp_g");
  detail::require_qubit_channel(n2, "sdpp_g");
  detail::require_qubit_state(omega, "sdpp_g: control C");
  detail::require_qubit_state(xi, "sdpp_g: control D");
  const CMatrix circuit = gates::cphase_md_on_mcd() * gates::cnot_mc_on_mcd();
  std::vector<CMatrix> preps;
  for (const auto& a : detail::append_state_kraus(2, omega))
    for (const auto& b : detail::append_state_kraus(4, xi)) preps.push_back(b * a);
  std::vector<CMatrix> kraus;
  for (const auto& a : n2.kraus())
    for (const auto& b : n1.kraus()) {
      const CMatrix post = kron(a * b, CMatrix::Identity(4, 4)) * circuit;
      for (const auto& p : preps) kraus.push_back(post * p);
    }
  return Channel::from_kraus(std::move(kraus));
}

/// Receiver decoding for sdpp_g: measure D in the ± basis, apply X to C on
/// outcome −, discard M and D. Channel from M ⊗ C ⊗ D to C.
inline Channel sdpp_g_decoder() {
  std::vector<CMatrix> kraus;
  const CVector ds[2] = {qubit::plus(), qubit::minus()};
  for (std::size_t m = 0; m < 2; ++m)
    for (int s = 0; s < 2; ++s) {
      const CMatrix correction = s == 0 ? qubit::I() : qubit::X();
      kraus.push_back(kron({CMatrix(basis_vector(2, m).adjoint()), correction,
                            CMatrix(ds[s].adjoint())}));
    }
  return Channel::from_kraus(std::move(kraus));
}

//=========================================================================
// Assisted supermaps
//=========================================================================

/// D ∘ (C ⊗ I^clas_Aux) ∘ E with E: A' -> A ⊗ Aux and D: B ⊗ Aux -> B'.
/// The auxiliary dimension is E.dim_out / C.dim_in.
inline Channel assisted_classical(const Channel& c, const Channel& e, const Channel& d) {
  if (e.dim_out() % c.dim_in() != 0)
    throw DimensionError("assisted_classical: encoder output is not A ⊗ Aux");
  const std::size_t aux = e.dim_out() / c.dim_in();
  if (d.dim_in() != c.dim_out() * aux)
    throw DimensionError("assisted_classical: decoder input is not B ⊗ Aux");
  return compose(d, compose(tensor(c, classical_identity(aux)), e));
}

/// D ∘ (C∘E ⊗ I_Baux) ∘ (I_A' ⊗ phi) with E: A' ⊗ A_aux -> A,
/// D: B ⊗ B_aux -> B', phi on A_aux ⊗ B_aux.
inline Channel assisted_entangled(const Channel& c, const Channel& e, const Channel& d,
                                  const DensityMatrix& phi) {
  if (e.dim_out() != c.dim_in())
    throw DimensionError("assisted_entangled: encoder output must feed the channel");
  if (d.dim_in() % c.dim_out() != 0)
    throw DimensionError("assisted_entangled: decoder input is not B ⊗ B_aux");
  const std::size_t b_aux = d.dim_in() / c.dim_out();
  if (phi.dim() % b_aux != 0)
    throw DimensionError("assisted_entangled: shared state is not A_aux ⊗ B_aux");
  const std::size_t a_aux = phi.dim() / b_aux;
  if (e.dim_in() % a_aux != 0)
    throw DimensionError("assisted_entangled: encoder input is not A' ⊗ A_aux");
  const std::size_t a_prime = e.dim_in() / a_aux;
  const Channel share = append_state(a_prime, phi);
  return compose(d, compose(tensor(compose(c, e), identity(b_aux)), share));
}

//=========================================================================
// Discarding and causal structure
//=========================================================================

/// Drops the m-th channel (1-based, as in S^m_discard).
template <class T>
std::vector<T> discard(const std::vector<T>& ns, std::size_t m) {
  if (m < 1 || m > ns.size())
    throw IndexError("discard: index " + std::to_string(m) + " out of range 1.." +
                     std::to_string(ns.size()));
  std::vector<T> out;
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (i + 1 != m) out.push_back(ns[i]);
  return out;
}

// Partial order on party labels. The given pairs generate the order; the
// reflexive-transitive closure is taken on construction and antisymmetry
// is enforced.
class CausalPoset {
 public:
  CausalPoset(std::vector<std::string> parties,
              const std::vector<std::pair<std::string, std::string>>& leq)
      : parties_(std::move(parties)) {
    for (std::size_t i = 0; i < parties_.size(); ++i) {
      if (!index_.emplace(parties_[i], i).second)
        throw ValidationError("poset: duplicate party '" + parties_[i] + "'");
    }
    const std::size_t n = parties_.size();
    rel_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) rel_[i][i] = true;
    for (const auto& [a, b] : leq) rel_[index_of(a)][index_of(b)] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (rel_[i][k] && rel_[k][j]) rel_[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rel_[i][j] && rel_[j][i])
          throw ValidationError("poset: '" + parties_[i] + "' and '" + parties_[j] +
                                "' precede each other");
  }

  const std::vector<std::string>& parties() const noexcept { return parties_; }
  bool contains(const std::string& p) const { return index_.count(p) != 0; }
  bool leq(const std::string& a, const std::string& b) const {
    return rel_[index_of(a)][index_of(b)];
  }

 private:
  std::size_t index_of(const std::string& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw ValidationError("poset: unknown party '" + p + "'");
    return it->second;
  }

  std::vector<std::string> parties_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> rel_;
};

struct NetworkAssignment {
  Channel channel;
  std::string from;
  std::string to;
};

/// True iff every channel is placed from a party to one in its future.
inline bool validate_network_placement(const CausalPoset& poset,
                                       const std::vector<NetworkAssignment>& assignments) {
  bool ok = true;
  for (const auto& a : assignments) ok = poset.leq(a.from, a.to) && ok;
  return ok;
}

//=========================================================================
// Supermap descriptors
//=========================================================================

enum class SupermapKind {
  BasicPlace,
  ParallelPlace,
  SequentialPlace,
  Switch,
  Superposition,
  SdppF,
  SdppG,
  Encode,
  Repeater,
  Decode,
  AssistedClassical,
  AssistedEntangled,
  Discard,
};

inline constexpr std::pair<SupermapKind, std::string_view> kSupermapKindNames[] = {
    {SupermapKind::BasicPlace, "BasicPlace"},
    {SupermapKind::ParallelPlace, "ParallelPlace"},
    {SupermapKind::SequentialPlace, "SequentialPlace"},
    {SupermapKind::Switch, "Switch"},
    {SupermapKind::Superposition, "Superposition"},
    {SupermapKind::SdppF, "SdppF"},
    {SupermapKind::SdppG, "SdppG"},
    {SupermapKind::Encode, "Encode"},
    {SupermapKind::Repeater, "Repeater"},
    {SupermapKind::Decode, "Decode"},
    {SupermapKind::AssistedClassical, "AssistedClassical"},
    {SupermapKind::AssistedEntangled, "AssistedEntangled"},
    {SupermapKind::Discard, "Discard"},
};

inline std::string_view to_string(SupermapKind k) {
  for (const auto& [kind, name] : kSupermapKindNames)
    if (kind == k) return name;
  return "?";
}

inline SupermapKind supermap_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kSupermapKindNames)
    if (name == s) return kind;
  throw ValidationError("unknown supermap kind '" + std::string(s) + "'");
}

struct SupermapParams {
  std::optional<DensityMatrix> omega;  // order / path / control C state
  std::optional<DensityMatrix> xi;     // control D state
  std::optional<DensityMatrix> phi;    // shared entangled state
  std::optional<Channel> e;
  std::optional<Channel> r;
  std::optional<Channel> d;
  std::size_t m = 1;      // discard index, 1-based
  std::size_t arity = 0;  // for ParallelPlace, SequentialPlace, Discard
  std::size_t dim = 2;    // dimension of the input channels
};

// An input to a descriptor: a plain channel, or a vacuum extension for the
// superposition placement. Superposition extends plain channels
// incoherently; every other kind uses the base of an extension.
using ChannelArg = std::variant<Channel, VacuumExtendedChannel>;

inline const Channel& base_of(const ChannelArg& a) {
  if (const auto* v = std::get_if<VacuumExtendedChannel>(&a)) return v->base();
  return std::get<Channel>(a);
}

inline VacuumExtendedChannel extension_of(const ChannelArg& a) {
  if (const auto* v = std::get_if<VacuumExtendedChannel>(&a)) return *v;
  return incoherent_extension(std::get<Channel>(a));
}

// A supermap with its placement-bound parameters fixed at construction
// (omega is part of the placement, not a sender input).
class SupermapDescriptor {
 public:
  SupermapDescriptor(SupermapKind kind, SupermapParams params)
      : kind_(kind), params_(std::move(params)) {
    validate();
  }

  static SupermapDescriptor basic_place(std::size_t dim = 2) {
    SupermapParams p;
    p.dim = dim;
    return {SupermapKind::BasicPlace, std::move(p)};
  }
  static SupermapDescriptor switch_place(DensityMatrix omega) {
    SupermapParams p;
    p.omega = std::move(omega);
    return {SupermapKind::Switch, std::move(p)};
  }
  static SupermapDescriptor superposition(DensityMatrix omega) {
    SupermapParams p;
    p.omega = std::move(omega);
    return {SupermapKind::Superposition, std::move(p)};
  }
  static SupermapDescriptor sdpp_f() { return {SupermapKind::SdppF, {}}; }
  static SupermapDescriptor sdpp_g(DensityMatrix omega, DensityMatrix xi) {
    SupermapParams p;
    p.omega = std::move(omega);
    p.xi = std::move(xi);
    return {SupermapKind::SdppG, std::move(p)};
  }

  SupermapKind kind() const noexcept { return kind_; }
  const SupermapParams& params() const noexcept { return params_; }
  std::size_t input_dim() const noexcept { return params_.dim; }
  bool takes_extensions() const noexcept { return kind_ == SupermapKind::Superposition; }

  std::size_t arity() const noexcept {
    switch (kind_) {
      case SupermapKind::ParallelPlace:
      case SupermapKind::SequentialPlace:
      case SupermapKind::Discard:
        return params_.arity;
      case SupermapKind::Switch:
      case SupermapKind::Superposition:
      case SupermapKind::SdppF:
      case SupermapKind::SdppG:
      case SupermapKind::Repeater:
        return 2;
      default:
        return 1;
    }
  }

  Channel evaluate(const std::vector<ChannelArg>& args) const {
    if (args.size() != arity())
      throw DimensionError("supermap " + std::string(to_string(kind_)) + " takes " +
                           std::to_string(arity()) + " channels, got " +
                           std::to_string(args.size()));
    std::vector<Channel> cs;
    for (const auto& a : args) cs.push_back(base_of(a));
    switch (kind_) {
      case SupermapKind::BasicPlace:
        return cs[0];
      case SupermapKind::ParallelPlace:
      case SupermapKind::SequentialPlace:
        return tensor(cs);
      case SupermapKind::Switch:
        return superchan::switch_place(cs[0], cs[1], *params_.omega);
      case SupermapKind::Superposition:
        return superposition_place(extension_of(args[0]), extension_of(args[1]),
                                   *params_.omega);
      case SupermapKind::SdppF:
        return superchan::sdpp_f(cs[0], cs[1]);
      case SupermapKind::SdppG:
        return superchan::sdpp_g(cs[0], cs[1], *params_.omega, *params_.xi);
      case SupermapKind::Encode:
        return compose(cs[0], *params_.e);
      case SupermapKind::Decode:
        return compose(*params_.d, cs[0]);
      case SupermapKind::Repeater:
        return compose(cs[1], compose(*params_.r, cs[0]));
      case SupermapKind::AssistedClassical:
        return assisted_classical(cs[0], *params_.e, *params_.d);
      case SupermapKind::AssistedEntangled:
        return assisted_entangled(cs[0], *params_.e, *params_.d, *params_.phi);
      case SupermapKind::Discard: {
        const auto kept = discard(cs, params_.m);
        return kept.empty() ? identity(1) : tensor(kept);
      }
    }
    throw Error("unhandled supermap kind");
  }

  Channel evaluate(const std::vector<Channel>& channels) const {
    return evaluate(std::vector<ChannelArg>(channels.begin(), channels.end()));
  }

 private:
  void require(bool present, std::string_view what) const {
    if (!present)
      throw ValidationError("supermap " + std::string(to_string(kind_)) +
                            " requires parameter '" + std::string(what) + "'");
  }

  void validate() const {
    if (params_.dim == 0) throw ValidationError("supermap input dimension must be positive");
    switch (kind_) {
      case SupermapKind::ParallelPlace:
      case SupermapKind::SequentialPlace:
        require(params_.arity >= 1, "arity");
        break;
      case SupermapKind::Discard:
        require(params_.arity >= 1, "arity");
        if (params_.m < 1 || params_.m > params_.arity)
          throw IndexError("discard index out of range");
        break;
      case SupermapKind::Switch:
      case SupermapKind::Superposition:
        require(params_.omega.has_value(), "omega");
        detail::require_qubit_state(*params_.omega, "control state");
        break;
      case SupermapKind::SdppF:
        if (params_.dim != 2) throw DimensionError("SDPP supermaps act on qubit channels");
        break;
      case SupermapKind::SdppG:
        if (params_.dim != 2) throw DimensionError("SDPP supermaps act on qubit channels");
        require(params_.omega.has_value(), "omega");
        require(params_.xi.has_value(), "xi");
        break;
      case SupermapKind::Encode:
        require(params_.e.has_value(), "e");
        break;
      case SupermapKind::Decode:
        require(params_.d.has_value(), "d");
        break;
      case SupermapKind::Repeater:
        require(params_.r.has_value(), "r");
        break;
      case SupermapKind::AssistedClassical:
        require(params_.e.has_value(), "e");
        require(params_.d.has_value(), "d");
        break;
      case SupermapKind::AssistedEntangled:
        require(params_.e.has_value(), "e");
        require(params_.d.has_value(), "d");
        require(params_.phi.has_value(), "phi");
        break;
      default:
        break;
    }
  }

  SupermapKind kind_;
  SupermapParams params_;
};

}  // namespace superchan

#endif  // SUPERCHAN_SUPERMAPS_HPP
