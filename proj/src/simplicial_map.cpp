#include "hocolim/simplicial_map.hpp"

#include <stdexcept>

namespace hocolim {

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialSet> source,
                             std::shared_ptr<const SimplicialSet> target,
                             std::vector<std::vector<FacePointer>> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!source_ || !target_) throw std::invalid_argument("simplicial map needs a source and a target");
  if (assignment_.size() != source_->num_dimensions()) {
    throw std::invalid_argument("map assignment does not cover every dimension of the source");
  }
  for (std::size_t d = 0; d < assignment_.size(); ++d) {
    if (assignment_[d].size() != source_->count(d)) {
      throw std::invalid_argument("map assignment misses generators in dimension " + std::to_string(d));
    }
    for (std::size_t k = 0; k < assignment_[d].size(); ++k) {
      const FacePointer& image = assignment_[d][k];
      const std::string& name = source_->name({d, k});
      if (!target_->contains(image.target)) {
        throw std::invalid_argument("image of '" + name + "' is not a generator of the target");
      }
      if (image.dimension() != d || !image.word.applies_to(image.target.dim)) {
        throw std::invalid_argument("image of '" + name + "' has the wrong dimension");
      }
    }
  }
}

const FacePointer& SimplicialMap::operator()(SimplexId generator) const {
  if (!source_->contains(generator)) throw std::out_of_range("generator not in map source");
  return assignment_[generator.dim][generator.index];
}

FacePointer SimplicialMap::apply(const FacePointer& simplex) const {
  const FacePointer& image = (*this)(simplex.target);
  return FacePointer(compose(simplex.word, image.word), image.target);
}

ValidationReport validate(const SimplicialMap& f) {
  ValidationReport report;
  const SimplicialSet& A = f.source();
  for (SimplexId id : A.ids()) {
    if (id.dim == 0) continue;
    const Generator& g = A[id];
    for (std::size_t i = 0; i < g.faces.size(); ++i) {
      try {
        const FacePointer lhs = f.apply(g.faces[i]);
        const FacePointer rhs = face_of(i, f(id), f.target());
        if (lhs != rhs) {
          report.violations.push_back(
              {id, i, i,
               "f(d" + std::to_string(i) + " " + g.name + ") = " + to_string(lhs, f.target()) +
                   " but d" + std::to_string(i) + " f(" + g.name + ") = " + to_string(rhs, f.target())});
        }
      } catch (const std::exception& e) {
        report.violations.push_back({id, i, i, std::string("cannot evaluate map: ") + e.what()});
      }
    }
  }
  return report;
}

SimplicialMap identity_map(std::shared_ptr<const SimplicialSet> K) {
  std::vector<std::vector<FacePointer>> assignment(K->num_dimensions());
  for (SimplexId id : K->ids()) assignment[id.dim].emplace_back(id);
  return SimplicialMap(K, K, std::move(assignment));
}

}  // namespace hocolim
