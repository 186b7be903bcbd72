#include "hocolim/simplicial_operator.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hocolim {

DegeneracyWord::DegeneracyWord(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 1; k < indices_.size(); ++k) {
    if (indices_[k - 1] <= indices_[k]) {
      throw std::invalid_argument("degeneracy word must be strictly decreasing: " +
                                  to_string(*this));
    }
  }
}

DegeneracyWord DegeneracyWord::collapsing(std::vector<std::size_t> positions) {
  std::sort(positions.begin(), positions.end(), std::greater<>());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return DegeneracyWord(std::move(positions));
}

bool DegeneracyWord::contains(std::size_t j) const {
  return std::find(indices_.begin(), indices_.end(), j) != indices_.end();
}

bool DegeneracyWord::applies_to(std::size_t dim) const {
  // s_{jp} is applied first, to dimension dim; s_{jk} sees dim + (p - 1 - k).
  const std::size_t p = indices_.size();
  for (std::size_t k = 0; k < p; ++k) {
    if (indices_[k] > dim + (p - 1 - k)) return false;
  }
  return true;
}

std::vector<OperatorSymbol> SimplicialOperator::symbols() const {
  std::vector<OperatorSymbol> out = hocolim::symbols(degeneracies);
  for (std::size_t i : faces) out.push_back(OperatorSymbol::face(i));
  return out;
}

std::vector<OperatorSymbol> symbols(const DegeneracyWord& word) {
  std::vector<OperatorSymbol> out;
  out.reserve(word.size());
  for (std::size_t j : word.indices()) out.push_back(OperatorSymbol::degeneracy(j));
  return out;
}

namespace {

using Kind = OperatorSymbol::Kind;

// Applies one rewrite to the first out-of-order adjacent pair. Returns false
// once the word is in normal form.
bool rewrite_once(std::vector<OperatorSymbol>& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const OperatorSymbol a = w[k];
    const OperatorSymbol b = w[k + 1];
    if (a.kind == Kind::face && b.kind == Kind::degeneracy) {
      const std::size_t i = a.index;
      const std::size_t j = b.index;
      if (i < j) {
        // d_i s_j = s_{j-1} d_i
        w[k] = OperatorSymbol::degeneracy(j - 1);
        w[k + 1] = OperatorSymbol::face(i);
      } else if (i == j || i == j + 1) {
        // d_j s_j = d_{j+1} s_j = id
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(k),
                w.begin() + static_cast<std::ptrdiff_t>(k + 2));
      } else {
        // d_i s_j = s_j d_{i-1}
        w[k] = OperatorSymbol::degeneracy(j);
        w[k + 1] = OperatorSymbol::face(i - 1);
      }
      return true;
    }
    if (a.kind == Kind::face && b.kind == Kind::face && a.index >= b.index) {
      // d_a d_b = d_b d_{a+1} for a >= b
      w[k] = OperatorSymbol::face(b.index);
      w[k + 1] = OperatorSymbol::face(a.index + 1);
      return true;
    }
    if (a.kind == Kind::degeneracy && b.kind == Kind::degeneracy && a.index <= b.index) {
      // s_a s_b = s_{b+1} s_a for a <= b
      w[k] = OperatorSymbol::degeneracy(b.index + 1);
      w[k + 1] = OperatorSymbol::degeneracy(a.index);
      return true;
    }
  }
  return false;
}

}  // namespace

SimplicialOperator normalize_operator(std::span<const OperatorSymbol> word) {
  std::vector<OperatorSymbol> w(word.begin(), word.end());
  while (rewrite_once(w)) {
  }
  SimplicialOperator op;
  std::vector<std::size_t> degeneracies;
  for (const OperatorSymbol& s : w) {
    if (s.is_face()) {
      op.faces.push_back(s.index);
    } else {
      degeneracies.push_back(s.index);
    }
  }
  op.degeneracies = DegeneracyWord(std::move(degeneracies));
  return op;
}

SimplicialOperator normalize_operator(std::span<const OperatorSymbol> word,
                                      std::size_t source_dim) {
  std::size_t dim = source_dim;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->is_face()) {
      if (dim == 0 || it->index > dim) {
        throw DimensionError("d" + std::to_string(it->index) + " applied in dimension " +
                             std::to_string(dim));
      }
      --dim;
    } else {
      if (it->index > dim) {
        throw DimensionError("s" + std::to_string(it->index) + " applied in dimension " +
                             std::to_string(dim));
      }
      ++dim;
    }
  }
  return normalize_operator(word);
}

std::size_t minimal_source_dimension(std::span<const OperatorSymbol> word) {
  // offset = dimension reached so far relative to the source dimension.
  std::ptrdiff_t need = 0;
  std::ptrdiff_t offset = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto index = static_cast<std::ptrdiff_t>(it->index);
    if (it->is_face()) {
      need = std::max(need, std::max<std::ptrdiff_t>(index, 1) - offset);
      --offset;
    } else {
      need = std::max(need, index - offset);
      ++offset;
    }
  }
  return static_cast<std::size_t>(need);
}

DegeneracyWord compose(const DegeneracyWord& outer, const DegeneracyWord& inner) {
  std::vector<OperatorSymbol> w = symbols(outer);
  for (std::size_t j : inner.indices()) w.push_back(OperatorSymbol::degeneracy(j));
  return normalize_operator(w).degeneracies;
}

std::string to_string(std::span<const OperatorSymbol> word) {
  if (word.empty()) return "id";
  std::string out;
  for (const OperatorSymbol& s : word) {
    if (!out.empty()) out += ' ';
    out += s.is_face() ? 'd' : 's';
    out += std::to_string(s.index);
  }
  return out;
}

std::string to_string(const DegeneracyWord& word) { return to_string(symbols(word)); }

std::string to_string(const SimplicialOperator& op) { return to_string(op.symbols()); }

std::vector<OperatorSymbol> parse_operator_word(std::string_view text) {
  std::vector<OperatorSymbol> out;
  std::size_t pos = 0;
  auto is_separator = [&](std::size_t p) {
    const char c = text[p];
    return c == ' ' || c == '\t' || c == ',' || c == '.' || c == '*' ||
           static_cast<unsigned char>(c) >= 0x80;  // tolerate U+2218 RING OPERATOR
  };
  while (pos < text.size()) {
    if (is_separator(pos)) {
      ++pos;
      continue;
    }
    const char c = text[pos];
    if (c != 'd' && c != 's') {
      throw std::invalid_argument("expected d<i> or s<j> at offset " + std::to_string(pos));
    }
    ++pos;
    std::size_t value = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
      throw std::invalid_argument("expected an index after '" + std::string(1, c) +
                                  "' at offset " + std::to_string(pos));
    }
    pos += static_cast<std::size_t>(ptr - first);
    out.push_back(c == 'd' ? OperatorSymbol::face(value) : OperatorSymbol::degeneracy(value));
  }
  return out;
}

}  // namespace hocolim
