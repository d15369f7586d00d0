#include "hapdisc/serialize.hpp"

#include <limits>
#include <stdexcept>

namespace hapdisc {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json to_json(const Realization& r) {
  Json signs = Json::array(), skips = Json::array();
  for (const Step& st : r.pattern.steps()) {
    signs.push_back(st.sign);
    skips.push_back(st.skip);
  }
  return {{"start", r.start}, {"signs", signs}, {"skips", skips}, {"terms", r.terms}};
}

Realization realization_from_json(const Json& j) {
  const auto& signs = j.at("signs");
  const auto& skips = j.at("skips");
  if (signs.size() != skips.size()) throw std::invalid_argument("realization: signs and skips differ in length");
  std::vector<Step> steps;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    const int sign = signs[k].get<int>();
    if (sign != 1 && sign != -1) throw std::invalid_argument("realization: sign must be +1 or -1");
    steps.push_back({sign, skips[k].get<std::int64_t>()});
  }
  Realization r = realize(SignedPattern(std::move(steps)), j.at("start").get<std::int64_t>());
  if (j.contains("terms") && j.at("terms").get<std::vector<std::int64_t>>() != r.terms)
    throw std::invalid_argument("realization: terms do not match the steps");
  return r;
}

namespace {

Json failure_json(const Failure& f) {
  return {{"i", f.i}, {"j", f.j}, {"reason", std::string(to_string(f.reason))}};
}

}  // namespace

Json to_json(const RealizabilityVerdict& v) {
  Json out{{"status", std::string(to_string(v.status))}};
  if (v.witness_start) out["start"] = integer_json(*v.witness_start);
  if (v.failure) out["failure"] = failure_json(*v.failure);
  return out;
}

Json to_json(const CycleVerdict& v) {
  Json out{{"valid", v.valid}, {"signed_sum", v.signed_sum}};
  if (v.witness_start) out["start"] = integer_json(*v.witness_start);
  if (v.failure) out["failure"] = failure_json(*v.failure);
  return out;
}

Json to_json(const RuleVerdict& v) {
  Json out{{"forbidden", v.forbidden}};
  if (v.rule) {
    out["rule"] = std::string(to_string(*v.rule));
    out["location"] = {v.first, v.last};
  }
  return out;
}

Json to_json(const Classification& c) {
  Json labeling = Json::object();
  for (const auto& [name, value] : c.labeling) labeling[name] = value;
  Json satisfied = Json::array();
  for (Rule r : c.satisfied) satisfied.push_back(std::string(to_string(r)));
  Json out{{"forces", c.forces},
           {"rule", std::string(to_string(c.rule))},
           {"labeling", labeling},
           {"satisfied", satisfied},
           {"reduction_factor", c.reduction_factor}};
  if (c.predicted_cycle) {
    Json cyc{{"pattern", format_pattern(*c.predicted_cycle)}};
    if (c.cycle_start) cyc["start"] = integer_json(*c.cycle_start);
    out["cycle"] = cyc;
  }
  return out;
}

Json to_json(const OddCycleCertificate& c) {
  return {{"pattern", format_pattern(c.pattern)}, {"start", c.start}, {"length", c.pattern.size()}};
}

Json to_json(const SearchResult& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"length", r.length},
          {"start", r.start},
          {"pattern", format_pattern(r.pattern)},
          {"signed", format_pattern(r.signed_pattern)},
          {"lower_bound", r.lower_bound}};
}

Json to_json(const ReductionInstance& ri, const std::optional<EssWitness>& w,
             const std::optional<SignedPattern>& cycle) {
  Json s = Json::array();
  for (const auto& v : ri.s) s.push_back(v.str());
  Json ess{{"answer", w.has_value()}};
  if (w) {
    Json x = Json::array(), y = Json::array();
    for (auto i : w->x) x.push_back(ri.source.values()[i].str());
    for (auto i : w->y) y.push_back(ri.source.values()[i].str());
    ess["X"] = x;
    ess["Y"] = y;
  }
  Json out{{"M", ri.M.str()}, {"r", ri.r.str()}, {"t", ri.t.str()}, {"s", s}, {"ess", ess}};
  if (cycle) out["cycle"] = format_pattern(*cycle);
  return out;
}

}  // namespace hapdisc
