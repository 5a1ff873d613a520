// Copyright 2026 The sepfrontier Authors
// SPDX-License-Identifier: Apache-2.0

#include "sepfrontier/plan.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "sepfrontier/error.hpp"

namespace sepfrontier {

namespace {

namespace pt = boost::property_tree;

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(const std::string& text, const std::string& separators) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (separators.find(ch) != std::string::npos) {
      if (!trim(current).empty()) out.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!trim(current).empty()) out.push_back(trim(current));
  return out;
}

int parse_int(const std::string& text, const std::string& context) {
  int value = 0;
  auto r = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
    throw Error(ErrorKind::Parse, context + ": cannot read integer '" + text + "'");
  }
  return value;
}

std::vector<int> parse_sites(const std::string& text) {
  std::vector<int> out;
  for (const auto& token : tokens(text, " ,\t")) {
    if (const auto dots = token.find(".."); dots != std::string::npos) {
      const int lo = parse_int(token.substr(0, dots), "[sites]");
      const int hi = parse_int(token.substr(dots + 2), "[sites]");
      if (hi < lo) throw Error(ErrorKind::Parse, "[sites]: empty range '" + token + "'");
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      out.push_back(parse_int(token, "[sites]"));
    }
  }
  return out;
}

std::string get(const pt::ptree& tree, const std::string& path) {
  return trim(tree.get<std::string>(path, ""));
}

}  // namespace

std::vector<double> parse_q_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& token : tokens(text, " ,\t")) {
    if (token == "inf" || token == "infinity" || token == "Infinity") {
      out.push_back(kInfiniteQ);
      continue;
    }
    double q = 0.0;
    auto r = std::from_chars(token.data(), token.data() + token.size(), q);
    if (r.ec != std::errc{} || r.ptr != token.data() + token.size()) {
      throw Error(ErrorKind::Parse, "cannot read q value '" + token + "'");
    }
    if (!(q > 0.0)) throw Error(ErrorKind::UnsupportedQ, "q must be > 0, got " + token);
    out.push_back(q);
  }
  return out;
}

SweepPlan parse_plan(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed plan: ") + e.what());
  }
  for (const auto& [section, _] : tree) {
    static const std::vector<std::string> known{"family", "spin", "sites", "q", "coeffs", "base", "options"};
    if (std::find(known.begin(), known.end(), section) == known.end()) {
      throw Error(ErrorKind::Parse, "unknown plan section [" + section + "]");
    }
  }

  SweepPlan plan;
  for (const auto& name : tokens(get(tree, "family.values"), " ,\t")) {
    if (name == "cc") {
      plan.families.push_back(FamilyKind::CC);
    } else if (name == "werner") {
      plan.families.push_back(FamilyKind::Werner);
    } else {
      throw Error(ErrorKind::Parse, "[family]: unknown family '" + name + "' (expected cc or werner)");
    }
  }
  for (const auto& s : tokens(get(tree, "spin.values"), " ,\t")) plan.spins.push_back(Spin::parse(s));
  plan.sites = parse_sites(get(tree, "sites.values"));
  for (int n : plan.sites) {
    if (n < 2) throw Error(ErrorKind::Parse, "[sites]: sweeps need N >= 2, got " + std::to_string(n));
  }
  if (const auto q = get(tree, "q.values"); !q.empty()) plan.q_grid = parse_q_list(q);

  if (const auto text = get(tree, "coeffs.values"); !text.empty()) {
    plan.coefficient_sets.clear();
    for (const auto& set : tokens(text, ";")) {
      if (set == "uniform") {
        plan.coefficient_sets.emplace_back(std::nullopt);
      } else {
        plan.coefficient_sets.emplace_back(WernerSpec::parse(set));
      }
    }
  }
  if (const auto text = get(tree, "base.values"); !text.empty()) {
    plan.bases.clear();
    for (const auto& base : tokens(text, ";")) {
      if (base == "default") {
        plan.bases.emplace_back(std::nullopt);
      } else {
        plan.bases.emplace_back(SpinConfig::parse(base));
      }
    }
  }
  if (const auto c = get(tree, "base.c"); !c.empty()) {
    plan.c = parse_int(c.front() == '+' ? c.substr(1) : c, "[base] c");
    if (plan.c != 1 && plan.c != -1) throw Error(ErrorKind::Parse, "[base] c must be +1 or -1");
  }
  if (const auto cap = get(tree, "options.cap"); !cap.empty()) {
    const int value = parse_int(cap, "[options] cap");
    if (value < 1) throw Error(ErrorKind::Parse, "[options] cap must be positive");
    plan.cap = static_cast<std::size_t>(value);
  }
  if (const auto m = get(tree, "options.max_subset_size"); !m.empty()) {
    plan.max_subset_size = parse_int(m, "[options] max_subset_size");
  }
  if (const auto scope = get(tree, "options.scope"); !scope.empty()) {
    if (scope == "all") {
      plan.scope = EntropicScope::AllSubsets;
    } else if (scope == "largest") {
      plan.scope = EntropicScope::LargestSubsets;
    } else {
      throw Error(ErrorKind::Parse, "[options] scope must be 'all' or 'largest'");
    }
  }
  return plan;
}

SweepPlan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open plan file '" + path + "'");
  return parse_plan(in);
}

}  // namespace sepfrontier
