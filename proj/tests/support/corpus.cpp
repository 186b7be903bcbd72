#include "corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hocolim/category.hpp"
#include "hocolim/constructions.hpp"

namespace test_support {

using namespace hocolim;

std::string data_path(const std::string& file) { return std::string(HOCOLIM_DATA_DIR) + "/" + file; }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

const dsl::Document& corpus_document() {
  static const dsl::Document doc = dsl::parse(read_file(data_path("corpus.sset")));
  return doc;
}

const std::vector<NamedSset>& corpus_ssets() {
  static const std::vector<NamedSset> all = [] {
    std::vector<NamedSset> out;
    for (std::size_t n = 0; n <= 4; ++n) out.push_back({"simplex" + std::to_string(n), standard_simplex(n)});
    for (std::size_t n = 1; n <= 4; ++n) out.push_back({"boundary" + std::to_string(n), boundary(n)});
    for (std::size_t k = 1; k <= 3; ++k) out.push_back({"circle" + std::to_string(k), circle(k)});
    out.push_back({"torus", product(circle(1), circle(1))});
    for (const dsl::Declaration& d : corpus_document().declarations()) {
      if (const auto* K = std::get_if<std::shared_ptr<const SimplicialSet>>(&d.entity)) {
        out.push_back({"corpus:" + d.name, **K});
      } else if (const auto* C = std::get_if<FiniteCategory>(&d.entity)) {
        out.push_back({"nerve:" + d.name, nerve(*C)});
      } else if (const auto* D = std::get_if<dsl::DiagramDecl>(&d.entity)) {
        out.push_back({"total:" + d.name, nerve(grothendieck(D->diagram))});
      }
    }
    out.push_back({"nerve:simplex3", nerve(poset_as_category(Poset::chain(4)))});
    return out;
  }();
  return all;
}

}  // namespace test_support
