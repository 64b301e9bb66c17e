#pragma once

// Families of opens used to exercise the diagonalization engine. Each entry
// carries its JSON description and, independently, the index n_k that the
// least-index search must find at each level.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scottmax/sequence.hpp"

namespace fleet {

using scottmax::Nat;
using json = nlohmann::json;

struct Entry {
  std::string name;
  std::function<json(Nat)> level;  // families of U_k
  std::function<Nat(Nat)> expected_n;
};

inline json fam(const char* kind, Nat k) { return {{"kind", kind}, {"k", k}}; }

inline std::vector<Entry> entries() {
  return {
      {"rank-doubling",
       [](Nat k) { return json::array({fam("x_rank_at_least", 2 * k), fam("star_len_at_least", k)}); },
       [](Nat k) { return 2 * k; }},
      {"rank-offset",
       [](Nat k) { return json::array({fam("x_rank_at_least", k + 5), fam("sigma_len_at_least", k)}); },
       [](Nat k) { return k + 5; }},
      {"constant", [](Nat) { return json::array({fam("x_rank_at_least", 1)}); }, [](Nat) { return Nat{1}; }},
      {"column-boost",
       [](Nat k) {
         return json::array({fam("x_rank_at_least", 10), {{"kind", "x_column"}, {"m", k}, {"min_n", k}},
                             fam("sigma_len_at_least", 2)});
       },
       [](Nat k) { return std::min<Nat>(k, 10); }},
      {"explicit-seeds",
       [](Nat k) {
         return json::array({fam("x_rank_at_least", k + 1),
                             {{"kind", "explicit_list"},
                              {"elems", {"x(" + std::to_string(k) + ",3)", "s[1,1]"}}},
                             fam("star_len_at_least", 4)});
       },
       [](Nat k) { return std::min<Nat>(3, k + 1); }},
      {"squares", [](Nat k) { return json::array({fam("x_rank_at_least", k * k), fam("star_len_at_least", 1)}); },
       [](Nat k) { return k * k; }},
      {"pointwise",
       [](Nat k) {
         return json::array({fam("x_rank_at_least", 100),
                             {{"kind", "single"}, {"elem", "x(" + std::to_string(k) + "," + std::to_string(2 * k + 1) + ")"}},
                             fam("sigma_len_at_least", k)});
       },
       [](Nat k) { return std::min<Nat>(2 * k + 1, 100); }},
  };
}

// Family file listing U_1..U_depth explicitly.
inline std::string to_json(const Entry& e, Nat depth) {
  json opens = json::array();
  for (Nat k = 1; k <= depth; ++k) opens.push_back({{"families", e.level(k)}});
  return json{{"name", e.name}, {"opens", opens}}.dump();
}

}  // namespace fleet
