#pragma once

#include <memory>
#include <vector>

#include "hocolim/simplicial_set.hpp"

namespace hocolim {

/// A map of simplicial sets given on generators. Source and target are shared
/// and immutable, so several maps (and a Document) can refer to one set.
class SimplicialMap {
 public:
  /// `assignment[d][k]` is the image of generator (d, k) of the source. Throws
  /// std::invalid_argument if the shape or any image dimension is wrong.
  SimplicialMap(std::shared_ptr<const SimplicialSet> source,
                std::shared_ptr<const SimplicialSet> target,
                std::vector<std::vector<FacePointer>> assignment);

  [[nodiscard]] const SimplicialSet& source() const { return *source_; }
  [[nodiscard]] const SimplicialSet& target() const { return *target_; }
  [[nodiscard]] const std::shared_ptr<const SimplicialSet>& source_ptr() const { return source_; }
  [[nodiscard]] const std::shared_ptr<const SimplicialSet>& target_ptr() const { return target_; }

  [[nodiscard]] const FacePointer& operator()(SimplexId generator) const;

  /// Image of an arbitrary simplex s_w x of the source.
  [[nodiscard]] FacePointer apply(const FacePointer& simplex) const;

 private:
  std::shared_ptr<const SimplicialSet> source_;
  std::shared_ptr<const SimplicialSet> target_;
  std::vector<std::vector<FacePointer>> assignment_;
};

/// Checks f(d_i x) = d_i f(x) for every generator x and face index i.
ValidationReport validate(const SimplicialMap& f);

/// Identity map of a shared set.
SimplicialMap identity_map(std::shared_ptr<const SimplicialSet> K);

}  // namespace hocolim
