#include "onelie/json_io.hpp"

namespace onelie {

using nlohmann::json;

json elements_to_json(const Query& q) { return json(q.elements()); }

json mask_to_json(std::uint64_t mask) { return elements_to_json(Query::from_mask(mask)); }

json family_to_json(const MultiFamily& family) {
  json queries = json::array();
  for (const auto& e : family.entries())
    queries.push_back({{"elements", elements_to_json(e.query)}, {"multiplicity", e.multiplicity}});
  return {{"n", family.n()}, {"queries", queries}};
}

MultiFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("queries"))
    throw std::invalid_argument("family JSON needs fields \"n\" and \"queries\"");
  if (!j.at("n").is_number_integer())
    throw std::invalid_argument("family field \"n\" must be an integer");
  const int n = j.at("n").get<int>();
  Universe u(n);
  if (!j.at("queries").is_array())
    throw std::invalid_argument("family field \"queries\" must be an array");
  std::vector<MultiFamily::Entry> entries;
  for (const auto& q : j.at("queries")) {
    if (!q.is_object() || !q.contains("elements"))
      throw std::invalid_argument("each query needs an \"elements\" array");
    if (!q.at("elements").is_array())
      throw std::invalid_argument("query field \"elements\" must be an array");
    std::vector<int> elems;
    for (const auto& e : q.at("elements")) {
      if (!e.is_number_integer()) throw std::invalid_argument("query elements must be integers");
      elems.push_back(e.get<int>());
    }
    int mult = 1;
    if (q.contains("multiplicity")) {
      if (!q.at("multiplicity").is_number_integer())
        throw std::invalid_argument("query field \"multiplicity\" must be an integer");
      mult = q.at("multiplicity").get<int>();
    }
    entries.push_back({Query::from_elements(elems, n), mult});
  }
  return MultiFamily(u, std::move(entries));
}

json verdict_to_json(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Found:
      return {{"verdict", "found"}, {"element", v.element}};
    case VerdictKind::NoExcellent:
      return {{"verdict", "none"}};
    case VerdictKind::Undecidable:
      return {{"verdict", "undecidable"}};
    case VerdictKind::Inconsistent:
      return {{"verdict", "inconsistent"}};
  }
  throw std::logic_error("unreachable verdict kind");
}

json partition_to_json(const MultiFamily& family, const PartitionAssignment& split) {
  json first_pos = json::array(), second_pos = json::array();
  json first_sets = json::array(), second_sets = json::array();
  const auto& flat = family.flat();
  for (int p = 0; p < split.size(); ++p) {
    if (split.in_first[static_cast<std::size_t>(p)]) {
      first_pos.push_back(p);
      first_sets.push_back(elements_to_json(flat[static_cast<std::size_t>(p)]));
    } else {
      second_pos.push_back(p);
      second_sets.push_back(elements_to_json(flat[static_cast<std::size_t>(p)]));
    }
  }
  return {{"yes_side_positions", first_pos},
          {"yes_side_sets", first_sets},
          {"no_side_positions", second_pos},
          {"no_side_sets", second_sets}};
}

}  // namespace onelie
