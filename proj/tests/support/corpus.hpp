#pragma once

#include <string>
#include <vector>

#include "hocolim/dsl.hpp"
#include "hocolim/simplicial_set.hpp"

namespace test_support {

std::string data_path(const std::string& file);
std::string read_file(const std::string& path);

/// data/corpus.sset, parsed.
const hocolim::dsl::Document& corpus_document();

struct NamedSset {
  std::string name;
  hocolim::SimplicialSet sset;
};

/// Standard simplices and boundaries up to dimension 4, circle(1..3), the
/// torus, every sset in the corpus document and the nerve of every corpus
/// category and Grothendieck construction.
const std::vector<NamedSset>& corpus_ssets();

}  // namespace test_support
