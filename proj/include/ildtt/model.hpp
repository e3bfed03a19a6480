#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ildtt/fam.hpp"

namespace ildtt::model {

using fam::Comprehension;
using fam::IndexMap;
using fam::IndexSet;
using fam::PointedFam;
using fam::PointedSet;
using fam::Value;

/// A strict indexed symmetric monoidal category with comprehension, over
/// finite index sets. The default implementation of every hook is
/// Fam(Set★); subclasses override hooks to model other (or broken) instances.
class ModelInstance {
 public:
  virtual ~ModelInstance() = default;
  virtual std::string describe() const { return "Fam(Set*)"; }

  virtual PointedFam reindex(const IndexMap& f, const PointedFam& a) const;
  virtual Comprehension comprehend(const PointedFam& a) const;
  /// ⟨f, a⟩ : S' → S.A for f : S' → S and a section s' ↦ a(s') ∈ A(f s').
  virtual IndexMap pair(const IndexMap& f, const PointedFam& a, const std::map<Value, Value>& section) const;
  virtual PointedSet unit() const;
  virtual PointedSet tensor(const PointedSet& x, const PointedSet& y) const;
  virtual PointedFam sigma(const PointedFam& a, const PointedFam& b) const;
  virtual PointedFam pi(const PointedFam& a, const PointedFam& b) const;
  virtual PointedFam id(const PointedFam& a, const PointedFam& b) const;
  virtual PointedFam bang(const PointedFam& a) const;
  /// Σ along an arbitrary index map, the left adjoint L.
  virtual PointedFam sigma_along(const IndexMap& f, const PointedFam& x) const;

  PointedFam tensor_fam(const PointedFam& a, const PointedFam& b) const;
};

enum class Fault {
  None,
  CorruptPairing,
  NonStrictReindex,
  CollapseTensor,
  DropSigmaSummand,
  DropPiSection,
  InflateId,
  DropBangBase,
};

const char* fault_name(Fault f);
std::vector<Fault> all_faults();

/// Fam(Set★) with one hook deliberately broken.
class FaultyInstance : public ModelInstance {
 public:
  explicit FaultyInstance(Fault fault) : fault_(fault) {}
  std::string describe() const override;

  PointedFam reindex(const IndexMap& f, const PointedFam& a) const override;
  IndexMap pair(const IndexMap& f, const PointedFam& a, const std::map<Value, Value>& section) const override;
  PointedSet tensor(const PointedSet& x, const PointedSet& y) const override;
  PointedFam sigma(const PointedFam& a, const PointedFam& b) const override;
  PointedFam pi(const PointedFam& a, const PointedFam& b) const override;
  PointedFam id(const PointedFam& a, const PointedFam& b) const override;
  PointedFam bang(const PointedFam& a) const override;

 private:
  Fault fault_;
};

struct Bounds {
  std::size_t max_index = 3;
  std::size_t max_fiber = 4;
};

/// The concrete parameters of one verifier case; a failing case is its
/// own witness and can be replayed.
struct Witness {
  std::string condition;
  std::vector<std::size_t> a_sizes;   // A over S, |S| = a_sizes.size()
  std::vector<std::size_t> map;       // f : S' → S, as indices into S
  std::vector<std::size_t> map2;      // g : S'' → S' (strictness) or S'' → S
  std::vector<std::size_t> b_sizes;   // B over S.A, in order of the total set
  std::vector<std::size_t> c_sizes;   // a third family (Ξ', C or X)
  std::string element;                // the offending element or morphism
  std::string message;
};

std::string to_string(const Witness& w);

struct ConditionReport {
  std::string condition;
  std::string instance;
  Bounds bounds;
  bool pass = true;
  std::size_t cases = 0;
  std::optional<Witness> witness;
};

/// Conditions checked by the sweep, in order.
const std::vector<std::string>& condition_names();

ConditionReport verify(const ModelInstance& m, const std::string& condition, const Bounds& bounds);
ConditionReport verify_comprehension(const ModelInstance& m, const Bounds& bounds);
ConditionReport verify_frobenius(const ModelInstance& m, const Bounds& bounds);
/// former is "sigma", "pi" or "id".
ConditionReport verify_beck_chevalley(const ModelInstance& m, const std::string& former, const Bounds& bounds);
ConditionReport verify_lawvere(const ModelInstance& m, const Bounds& bounds);
std::vector<ConditionReport> verify_all(const ModelInstance& m, const Bounds& bounds);

/// Re-run the recorded case; true when it fails again.
bool replay_witness(const ModelInstance& m, const Witness& w);

/// M_Δ(a) : Δ.A → Δ.B for a fiberwise pointed map a : A → B.
IndexMap comprehension_functor(const ModelInstance& m, const PointedFam& a, const PointedFam& b,
                               const std::map<Value, fam::PointedMap>& morphism);

}  // namespace ildtt::model
