#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace spexlab {

/// Tolerance applied to every reported inequality.
constexpr double kReportTolerance = 1e-9;

enum class Relation { AtLeast, AtMost, Greater, Less, Equal };

/// True when `lhs relation rhs` holds within kReportTolerance.
bool holds(double lhs, Relation relation, double rhs) noexcept;
const char* to_string(Relation relation) noexcept;

enum class LemmaId {
  L3_1, L3_2, L3_3, L3_4, L3_5, L3_6, L3_7, L3_8, L3_9,
  L4_1, L4_2, L4_3, L4_4, L4_5, L4_6, L4_7, L4_8, L4_9,
  T1_4_count,
  C5_1_cyclepower,
  C5_3_factor,
  C5_5_cliquefactor,
};

const char* to_string(LemmaId id) noexcept;

struct LemmaInputs {
  int n = 0;
  int delta_f = 0;
  std::optional<double> epsilon;
};

struct LemmaReport {
  LemmaId lemma_id = LemmaId::L3_1;
  LemmaInputs inputs;
  double lhs = 0.0;
  Relation relation = Relation::AtLeast;
  double rhs = 0.0;
  bool satisfied = false;
  std::string note;
};

LemmaReport make_lemma_report(LemmaId id, const LemmaInputs& inputs, double lhs, Relation relation, double rhs,
                              std::string note = {});

enum class BoundName { HongNikiforov, Wilf, FengYu, MotzkinStraus, CliqueVector };
const char* to_string(BoundName name) noexcept;

struct BoundReport {
  BoundName bound_name = BoundName::HongNikiforov;
  std::string graph_id;
  double bound_value = 0.0;
  double actual_value = 0.0;
  double slack = 0.0;  // bound_value - actual_value
  bool holds = false;  // slack >= -1e-9
  /// Set when a negative radicand from rounding was clamped to zero.
  bool clamped = false;
};

BoundReport make_bound_report(BoundName name, std::string graph_id, double bound_value, double actual_value);

struct IdentityReport {
  double lhs1 = 0.0;
  double rhs1 = 0.0;
  double lhs2 = 0.0;
  double rhs2 = 0.0;
  double max_abs_gap = 0.0;
};

struct PartitionReport {
  double epsilon = 0.0;
  int L_size = 0;
  int S_size = 0;
  double bound_3_over_eps = 0.0;
  bool within_bound = false;
};

struct VertexEntryReport {
  int vertex = 0;
  double c_v = 0.0;
  double predicted = 0.0;
  double actual = 0.0;
  double deviation = 0.0;
};

void to_json(nlohmann::json& j, const LemmaReport& r);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const IdentityReport& r);
void to_json(nlohmann::json& j, const PartitionReport& r);
void to_json(nlohmann::json& j, const VertexEntryReport& r);

/// Header `lemma_id,n,deltaF,eps,lhs,rhs,satisfied` plus one row per report.
std::string lemma_csv(const std::vector<LemmaReport>& reports);

}  // namespace spexlab
