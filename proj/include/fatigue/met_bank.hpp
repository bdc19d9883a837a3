#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fatigue/muscle.hpp"

namespace fatigue::metbank {

enum class BodyGroup { kGeneral, kShoulder, kElbow, kHand, kBackHip };

std::string to_string(BodyGroup group);

// Parses "general", "shoulder", "elbow", "hand" or "back-hip"; throws
// std::invalid_argument listing the valid names otherwise.
BodyGroup group_from_string(const std::string& name);

// Closed-form endurance-time expression in the normalized load f:
//   kPowerLaw            scale * f^exponent
//   kExponential         scale * exp(exponent * f)
//   kRationalPolynomial  poly[0] + poly[1]/f + poly[2]/f^2 + poly[3]/f^3
//   kShiftedPower        scale * (f - shift)^exponent
//   kRatioPower          scale * ((1 - f) / (f - shift))^exponent
enum class FormulaKind {
  kPowerLaw,
  kExponential,
  kRationalPolynomial,
  kShiftedPower,
  kRatioPower,
};

struct MetFormula {
  FormulaKind kind = FormulaKind::kPowerLaw;
  double scale = 0.0;
  double exponent = 0.0;
  double shift = 0.0;
  std::array<double, 4> poly{};

  double evaluate(double f) const;
  std::string text() const;
};

struct FmvcDomain {
  double lower = 0.0;
  double upper = 1.0;
  bool lower_open = true;
  bool upper_open = false;

  bool contains(double f) const;
  std::string text() const;  // e.g. "(0.14,1]"
};

// One published static maximum-endurance-time equation.
struct StaticMetModel {
  std::string id;
  std::string name;  // as cited in the endurance literature
  BodyGroup group;
  MetFormula formula;
  FmvcDomain domain;
};

struct BankOptions {
  // The Huijgens entry as printed in the source survey carries a bracket
  // exponent of -2.4, which makes MET grow with the load fraction. The
  // registry negates that exponent by default; this flag restores the
  // printed form.
  bool huijgens_as_printed = false;
};

// The 24 registered models in their fixed catalog order.
std::vector<StaticMetModel> model_table(const BankOptions& options = {});

// Catalog order, optionally restricted to one body group.
std::vector<StaticMetModel> list_models(
    const std::optional<BodyGroup>& group = std::nullopt,
    const BankOptions& options = {});

const StaticMetModel* find_model(const std::vector<StaticMetModel>& models,
                                 const std::string& id);

// Evaluates the model inside its validity domain; throws std::domain_error
// naming the violated boundary otherwise. Minutes.
double static_met(const StaticMetModel& model, NormalizedLoad f);

// True when MET strictly decreases across `samples` points spread over the
// interior of the model's domain.
bool monotone_decreasing(const StaticMetModel& model, int samples = 100);

// id,group,formula,domain rows in catalog order.
std::string catalog_csv(const std::vector<StaticMetModel>& models);

}  // namespace fatigue::metbank
