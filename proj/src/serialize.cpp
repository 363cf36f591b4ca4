#include "nilclean/serialize.hpp"

namespace nilclean {

namespace {

std::string_view branch_name(CubicBranch b) {
  switch (b) {
    case kCubeMinusSelf: return "a^3 - a";
    case kShiftedDown: return "a(a-1)(a-2)";
    case kShiftedUp: return "a(a+1)(a+2)";
  }
  return "?";
}

Json optional_elem(const std::optional<Elem>& e) {
  return e ? Json(*e) : Json(nullptr);
}

}  // namespace

Json certificate_json(const std::string& ring, const Certificate& cert) {
  Json j;
  j["ring"] = ring;
  j["element"] = cert.element;
  j["sign_e"] = cert.sign_e;
  j["sign_f"] = cert.sign_f ? Json(*cert.sign_f) : Json(nullptr);
  j["e"] = cert.e;
  j["f"] = optional_elem(cert.f);
  j["n"] = cert.n;
  j["nil_index"] = cert.nil_index;
  j["class"] = short_name(cert.cls);
  return j;
}

Json failure_json(const std::string& ring, Elem element, NilCleanClass cls) {
  Json j;
  j["ring"] = ring;
  j["element"] = element;
  j["class"] = short_name(cls);
  j["certificate"] = nullptr;
  return j;
}

Json maj_json(const std::optional<MajWitness>& witness) {
  if (!witness) return nullptr;
  Json j;
  j["central_idempotent"] = witness->central_idempotent;
  j["k"] = witness->k;
  j["cyclic_corner"] = witness->cyclic_corner_label;
  j["cyclic_corner_size"] = witness->cyclic_corner_size;
  j["s2nc_corner"] = witness->s2nc_corner_label;
  j["s2nc_corner_size"] = witness->s2nc_corner_size;
  return j;
}

Json classification_json(const ClassificationReport& report,
                         const std::optional<MajWitness>& maj) {
  Json j;
  j["ring"] = report.label;
  j["size"] = report.size;
  j["characteristic"] = report.characteristic;
  Json counts;
  counts["idempotents"] = report.idempotent_count;
  counts["nilpotents"] = report.nilpotent_count;
  counts["units"] = report.unit_count;
  counts["radical"] = report.radical_count;
  j["counts"] = counts;

  Json classes = Json::array();
  for (const auto& entry : report.entries) {
    Json c;
    c["class"] = short_name(entry.cls);
    c["verdict"] = to_string(entry.verdict);
    c["witness"] = optional_elem(entry.witness);
    c["failing"] = entry.failing;
    classes.push_back(c);
  }
  j["classes"] = classes;

  const auto& w = report.wsnc_criterion;
  Json wsnc;
  wsnc["holds"] = w.holds;
  wsnc["thirty_nilpotent"] = w.thirty_nilpotent;
  wsnc["failing"] = w.failing;
  wsnc["uniform_branch"] =
      w.uniform_branch ? Json(branch_name(*w.uniform_branch)) : Json(nullptr);
  Json s2nc;
  s2nc["holds"] = report.s2nc_criterion.holds;
  s2nc["failing"] = report.s2nc_criterion.failing;
  Json criteria;
  criteria["wsnc"] = wsnc;
  criteria["s2nc"] = s2nc;
  j["criteria"] = criteria;
  j["oracles_agree"] = report.oracles_agree();
  j["maj"] = maj_json(maj);
  return j;
}

Json suite_json(const SuiteReport& report) {
  Json instances = Json::array();
  for (const auto& inst : report.instances) {
    Json i;
    i["ring"] = inst.ring;
    i["lemma"] = inst.check;
    i["verdict"] = to_string(inst.outcome);
    if (!inst.witness.empty()) i["witness"] = inst.witness;
    if (inst.outcome == Outcome::skipped) i["skipped"] = true;
    instances.push_back(i);
  }
  const auto& s = report.summary;
  Json summary;
  summary["rings"] = s.rings;
  summary["wsnc_rings"] = s.wsnc_rings;
  summary["product_pairs"] = s.product_pairs;
  summary["instances"] = s.instances;
  summary["passed"] = s.passed;
  summary["vacuous"] = s.vacuous;
  summary["violations"] = s.violations;
  summary["skipped"] = s.skipped;
  Json exponents;
  for (const auto& [k, count] : s.cyclic_factor_exponents) {
    exponents[std::to_string(k)] = count;
  }
  summary["cyclic_factor_exponents"] = exponents;
  Json j;
  j["instances"] = instances;
  j["summary"] = summary;
  return j;
}

}  // namespace nilclean
