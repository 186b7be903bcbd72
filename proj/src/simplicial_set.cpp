#include "hocolim/simplicial_set.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace hocolim {

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(first) || first == '_') || first >= 0x80) return false;
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || !(std::isalnum(u) || u == '_')) return false;
  }
  // s<digits> is reserved for degeneracy symbols.
  if (name.size() >= 2 && name.front() == 's' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return false;
  }
  return true;
}

SimplexId SimplicialSet::add(std::size_t dim, std::string name, std::vector<FacePointer> faces) {
  if (!is_valid_name(name)) throw std::invalid_argument("invalid generator name '" + name + "'");
  if (by_name_.contains(name)) throw std::invalid_argument("duplicate generator name '" + name + "'");
  const std::size_t expected = dim == 0 ? 0 : dim + 1;
  if (faces.size() != expected) {
    throw std::invalid_argument("generator '" + name + "' of dimension " + std::to_string(dim) +
                                " needs " + std::to_string(expected) + " faces, got " +
                                std::to_string(faces.size()));
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const FacePointer& fp = faces[i];
    if (!contains(fp.target)) {
      throw std::invalid_argument("face d" + std::to_string(i) + " of '" + name +
                                  "' points at a missing generator");
    }
    if (fp.dimension() + 1 != dim) {
      throw std::invalid_argument("face d" + std::to_string(i) + " of '" + name +
                                  "' has dimension " + std::to_string(fp.dimension()) +
                                  ", expected " + std::to_string(dim - 1));
    }
    if (!fp.word.applies_to(fp.target.dim)) {
      throw std::invalid_argument("face d" + std::to_string(i) + " of '" + name +
                                  "' has a degeneracy index out of range");
    }
  }
  if (cells_.size() <= dim) cells_.resize(dim + 1);
  const SimplexId id{dim, cells_[dim].size()};
  by_name_.emplace(name, id);
  cells_[dim].push_back(Generator{std::move(name), std::move(faces)});
  return id;
}

std::string SimplicialSet::fresh_name(std::string_view base) const {
  std::string stem;
  for (char c : base) {
    const auto u = static_cast<unsigned char>(c);
    stem += (u < 0x80 && (std::isalnum(u) || u == '_')) ? c : '_';
  }
  if (stem.empty() || std::isdigit(static_cast<unsigned char>(stem.front()))) stem = "g" + stem;
  if (!is_valid_name(stem)) stem += '_';
  if (!by_name_.contains(stem)) return stem;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + "_" + std::to_string(k);
    if (!by_name_.contains(candidate)) return candidate;
  }
}

SimplexId SimplicialSet::add_fresh(std::size_t dim, std::string_view base,
                                   std::vector<FacePointer> faces) {
  return add(dim, fresh_name(base), std::move(faces));
}

std::size_t SimplicialSet::size() const {
  std::size_t n = 0;
  for (const auto& level : cells_) n += level.size();
  return n;
}

std::span<const Generator> SimplicialSet::generators(std::size_t dim) const {
  if (dim >= cells_.size()) return {};
  return cells_[dim];
}

const Generator& SimplicialSet::operator[](SimplexId id) const {
  if (!contains(id)) {
    throw std::out_of_range("no generator (" + std::to_string(id.dim) + ", " +
                            std::to_string(id.index) + ")");
  }
  return cells_[id.dim][id.index];
}

std::optional<SimplexId> SimplicialSet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<SimplexId> SimplicialSet::ids() const {
  std::vector<SimplexId> out;
  out.reserve(size());
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    for (std::size_t k = 0; k < cells_[d].size(); ++k) out.push_back({d, k});
  }
  return out;
}

std::vector<SimplexId> SimplicialSet::ids(std::size_t dim) const {
  std::vector<SimplexId> out;
  for (std::size_t k = 0; k < count(dim); ++k) out.push_back({dim, k});
  return out;
}

std::vector<std::size_t> counts_by_dimension(const SimplicialSet& K) {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < K.num_dimensions(); ++d) out.push_back(K.count(d));
  return out;
}

std::int64_t euler_char_combinatorial(const SimplicialSet& K) {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < K.num_dimensions(); ++d) {
    const auto n = static_cast<std::int64_t>(K.count(d));
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

FacePointer resolve(const SimplicialOperator& op, const FacePointer& fp, const SimplicialSet& K) {
  if (!K.contains(fp.target)) throw std::out_of_range("dangling generator in face pointer");
  std::vector<OperatorSymbol> word = op.symbols();
  for (std::size_t j : fp.word.indices()) word.push_back(OperatorSymbol::degeneracy(j));
  SimplicialOperator normal = normalize_operator(word, fp.target.dim);
  if (normal.faces.empty()) return FacePointer(std::move(normal.degeneracies), fp.target);
  // The innermost face hits the generator itself; look it up and recurse on
  // the remaining operator, which lives one dimension lower.
  const std::size_t innermost = normal.faces.back();
  normal.faces.pop_back();
  return resolve(normal, K[fp.target].faces.at(innermost), K);
}

FacePointer face_of(std::size_t i, const FacePointer& fp, const SimplicialSet& K) {
  return resolve(SimplicialOperator::face(i), fp, K);
}

SimplexId initial_vertex(SimplexId sigma, const SimplicialSet& K) {
  SimplicialOperator op;
  for (std::size_t i = 1; i <= sigma.dim; ++i) op.faces.push_back(i);
  return resolve(op, FacePointer(sigma), K).target;
}

SimplexId terminal_vertex(SimplexId sigma, const SimplicialSet& K) {
  const std::vector<OperatorSymbol> word(sigma.dim, OperatorSymbol::face(0));
  return resolve(normalize_operator(word), FacePointer(sigma), K).target;
}

std::vector<SimplexId> vertices_of(SimplexId sigma, const SimplicialSet& K) {
  std::vector<SimplexId> out;
  for (std::size_t k = 0; k <= sigma.dim; ++k) {
    SimplicialOperator op;
    for (std::size_t i = 0; i <= sigma.dim; ++i) {
      if (i != k) op.faces.push_back(i);
    }
    out.push_back(resolve(op, FacePointer(sigma), K).target);
  }
  return out;
}

std::vector<FacePointer> simplices_with_faces(const SimplicialSet& K, std::size_t dim,
                                              std::span<const FacePointer> faces) {
  std::vector<FacePointer> out;
  if (dim == 0) {
    for (SimplexId v : K.ids(0)) out.emplace_back(v);
    return out;
  }
  if (faces.size() != dim + 1) throw std::invalid_argument("simplices_with_faces: wrong face count");
  for (SimplexId id : K.ids(dim)) {
    const auto& own = K[id].faces;
    if (std::equal(own.begin(), own.end(), faces.begin(), faces.end())) out.emplace_back(id);
  }
  // A degenerate candidate s_j x has d_j = d_{j+1} = x, so x must be faces[j].
  for (std::size_t j = 0; j < dim; ++j) {
    const FacePointer& base = faces[j];
    if (!base.word.applies_to(base.target.dim) || base.dimension() + 1 != dim) continue;
    FacePointer candidate(compose(DegeneracyWord{j}, base.word), base.target);
    if (std::find(out.begin(), out.end(), candidate) != out.end()) continue;
    bool match = true;
    for (std::size_t i = 0; i <= dim && match; ++i) {
      match = face_of(i, candidate, K) == faces[i];
    }
    if (match) out.push_back(std::move(candidate));
  }
  return out;
}

ValidationReport validate(const SimplicialSet& K) {
  ValidationReport report;
  for (SimplexId id : K.ids()) {
    if (id.dim == 0) continue;
    const Generator& g = K[id];
    bool structural = true;
    if (g.faces.size() != id.dim + 1) {
      report.violations.push_back({id, 0, 0, "generator '" + g.name + "' has " +
                                                 std::to_string(g.faces.size()) + " faces"});
      continue;
    }
    for (std::size_t i = 0; i < g.faces.size(); ++i) {
      const FacePointer& fp = g.faces[i];
      std::string problem;
      if (!K.contains(fp.target)) {
        problem = "points at a missing generator";
      } else if (fp.dimension() + 1 != id.dim) {
        problem = "has dimension " + std::to_string(fp.dimension());
      } else if (!fp.word.applies_to(fp.target.dim)) {
        problem = "has an out-of-range degeneracy word";
      }
      if (!problem.empty()) {
        structural = false;
        report.violations.push_back(
            {id, i, i, "face d" + std::to_string(i) + " of '" + g.name + "' " + problem});
      }
    }
    if (!structural || id.dim < 2) continue;
    for (std::size_t j = 1; j <= id.dim; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        std::string message;
        try {
          const FacePointer lhs = face_of(i, g.faces[j], K);
          const FacePointer rhs = face_of(j - 1, g.faces[i], K);
          if (lhs != rhs) {
            message = "d" + std::to_string(i) + " d" + std::to_string(j) + " '" + g.name +
                      "' = " + to_string(lhs, K) + " but d" + std::to_string(j - 1) + " d" +
                      std::to_string(i) + " = " + to_string(rhs, K);
          }
        } catch (const std::exception& e) {
          message = std::string("cannot resolve faces of '") + g.name + "': " + e.what();
        }
        if (!message.empty()) report.violations.push_back({id, i, j, std::move(message)});
      }
    }
  }
  return report;
}

std::string to_string(const FacePointer& fp, const SimplicialSet& K) {
  std::string out;
  for (std::size_t j : fp.word.indices()) out += "s" + std::to_string(j) + " ";
  out += K.contains(fp.target) ? K.name(fp.target) : std::string("<missing>");
  return out;
}

bool same_presentation(const SimplicialSet& a, const SimplicialSet& b) {
  if (counts_by_dimension(a) != counts_by_dimension(b)) return false;
  auto pointer_key = [](const SimplicialSet& K, const FacePointer& fp) {
    return std::make_pair(std::vector<std::size_t>(fp.word.indices().begin(), fp.word.indices().end()),
                          K.name(fp.target));
  };
  for (SimplexId id : a.ids()) {
    const Generator& ga = a[id];
    const auto other = b.find(ga.name);
    if (!other || other->dim != id.dim) return false;
    const Generator& gb = b[*other];
    for (std::size_t i = 0; i < ga.faces.size(); ++i) {
      if (pointer_key(a, ga.faces[i]) != pointer_key(b, gb.faces[i])) return false;
    }
  }
  return true;
}

}  // namespace hocolim
