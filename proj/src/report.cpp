#include "spexlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace spexlab {

bool holds(double lhs, Relation relation, double rhs) noexcept {
  switch (relation) {
    case Relation::AtLeast:
    case Relation::Greater: return lhs >= rhs - kReportTolerance;
    case Relation::AtMost:
    case Relation::Less: return lhs <= rhs + kReportTolerance;
    case Relation::Equal: return std::abs(lhs - rhs) <= kReportTolerance;
  }
  return false;
}

const char* to_string(Relation relation) noexcept {
  switch (relation) {
    case Relation::AtLeast: return ">=";
    case Relation::AtMost: return "<=";
    case Relation::Greater: return ">";
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
  }
  return "?";
}

const char* to_string(LemmaId id) noexcept {
  switch (id) {
    case LemmaId::L3_1: return "L3.1";
    case LemmaId::L3_2: return "L3.2";
    case LemmaId::L3_3: return "L3.3";
    case LemmaId::L3_4: return "L3.4";
    case LemmaId::L3_5: return "L3.5";
    case LemmaId::L3_6: return "L3.6";
    case LemmaId::L3_7: return "L3.7";
    case LemmaId::L3_8: return "L3.8";
    case LemmaId::L3_9: return "L3.9";
    case LemmaId::L4_1: return "L4.1";
    case LemmaId::L4_2: return "L4.2";
    case LemmaId::L4_3: return "L4.3";
    case LemmaId::L4_4: return "L4.4";
    case LemmaId::L4_5: return "L4.5";
    case LemmaId::L4_6: return "L4.6";
    case LemmaId::L4_7: return "L4.7";
    case LemmaId::L4_8: return "L4.8";
    case LemmaId::L4_9: return "L4.9";
    case LemmaId::T1_4_count: return "T1.4-count";
    case LemmaId::C5_1_cyclepower: return "C5.1-cyclepower";
    case LemmaId::C5_3_factor: return "C5.3-factor";
    case LemmaId::C5_5_cliquefactor: return "C5.5-cliquefactor";
  }
  return "?";
}

LemmaReport make_lemma_report(LemmaId id, const LemmaInputs& inputs, double lhs, Relation relation, double rhs,
                              std::string note) {
  LemmaReport r;
  r.lemma_id = id;
  r.inputs = inputs;
  r.lhs = lhs;
  r.relation = relation;
  r.rhs = rhs;
  r.satisfied = holds(lhs, relation, rhs);
  r.note = std::move(note);
  return r;
}

const char* to_string(BoundName name) noexcept {
  switch (name) {
    case BoundName::HongNikiforov: return "HongNikiforov";
    case BoundName::Wilf: return "Wilf";
    case BoundName::FengYu: return "FengYu";
    case BoundName::MotzkinStraus: return "MotzkinStraus";
    case BoundName::CliqueVector: return "CliqueVector";
  }
  return "?";
}

BoundReport make_bound_report(BoundName name, std::string graph_id, double bound_value, double actual_value) {
  BoundReport r;
  r.bound_name = name;
  r.graph_id = std::move(graph_id);
  r.bound_value = bound_value;
  r.actual_value = actual_value;
  r.slack = bound_value - actual_value;
  r.holds = r.slack >= -kReportTolerance;
  return r;
}

void to_json(nlohmann::json& j, const LemmaReport& r) {
  nlohmann::json inputs = {{"n", r.inputs.n}, {"deltaF", r.inputs.delta_f}};
  if (r.inputs.epsilon) inputs["epsilon"] = *r.inputs.epsilon;
  j = {{"lemma_id", to_string(r.lemma_id)}, {"inputs", inputs},       {"lhs", r.lhs},
       {"relation", to_string(r.relation)}, {"rhs", r.rhs},          {"satisfied", r.satisfied},
       {"note", r.note}};
}

void to_json(nlohmann::json& j, const BoundReport& r) {
  j = {{"bound_name", to_string(r.bound_name)},
       {"graph_id", r.graph_id},
       {"bound_value", r.bound_value},
       {"actual_value", r.actual_value},
       {"slack", r.slack},
       {"holds", r.holds},
       {"clamped", r.clamped}};
}

void to_json(nlohmann::json& j, const IdentityReport& r) {
  j = {{"lhs1", r.lhs1}, {"rhs1", r.rhs1}, {"lhs2", r.lhs2}, {"rhs2", r.rhs2}, {"max_abs_gap", r.max_abs_gap}};
}

void to_json(nlohmann::json& j, const PartitionReport& r) {
  j = {{"epsilon", r.epsilon},
       {"L_size", r.L_size},
       {"S_size", r.S_size},
       {"bound_3_over_eps", r.bound_3_over_eps},
       {"within_bound", r.within_bound}};
}

void to_json(nlohmann::json& j, const VertexEntryReport& r) {
  j = {{"vertex", r.vertex},
       {"c_v", r.c_v},
       {"predicted", r.predicted},
       {"actual", r.actual},
       {"deviation", r.deviation}};
}

std::string lemma_csv(const std::vector<LemmaReport>& reports) {
  std::ostringstream os;
  os << "lemma_id,n,deltaF,eps,lhs,rhs,satisfied\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const auto& r : reports) {
    os << to_string(r.lemma_id) << ',' << r.inputs.n << ',' << r.inputs.delta_f << ','
       << (r.inputs.epsilon ? num(*r.inputs.epsilon) : std::string()) << ',' << num(r.lhs) << ',' << num(r.rhs)
       << ',' << (r.satisfied ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace spexlab
