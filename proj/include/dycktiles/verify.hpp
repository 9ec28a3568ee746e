#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dycktiles/poly.hpp"

namespace dycktiles {

struct IdentityCase {
  std::string identity;
  std::string params;  // JSON object
  std::string lhs, rhs;
  bool pass = false;
};

struct VerifyOptions {
  int max_n = -1;            // grid bound override
  int n = -1, k = -1;        // single-case overrides
  std::vector<int> comp;     // zigzag composition override
  int jobs = 1;
};

struct IdentityInfo {
  std::string id;
  std::string description;
};

std::vector<IdentityInfo> registered_identities();

// Evaluate one identity over its (possibly overridden) parameter grid.
std::vector<IdentityCase> run_identity(const std::string& id, const VerifyOptions& opt);

// Every registered identity, concatenated; deterministic order.
std::vector<IdentityCase> run_all(const VerifyOptions& opt);

std::string cases_json(const std::vector<IdentityCase>& cases);

}  // namespace dycktiles
