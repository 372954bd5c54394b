#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "liereduce/classify.hpp"
#include "liereduce/problem.hpp"

namespace liereduce {

struct Record {
  std::string problem;
  std::string operation;
  std::string verdict;  // pass, fail, discrepancy-documented, inconclusive
  std::string computed;
  std::string expected;
  double wall_ms = 0;
};

/// One JSON object per line, keys in Record order.
std::string to_json(const Record& r);

/// Lazily built objects of one problem: fields, charts, reduced systems.
class Workspace {
 public:
  explicit Workspace(const Problem& problem, SampleConfig config = {});

  const Problem& problem() const { return problem_; }
  const SampleConfig& config() const { return config_; }

  DESystem parent() const;
  VectorField field(const std::string& name);
  /// System the stage starts from.
  const DESystem& source(const std::string& stage);
  const PointTransformation& chart(const std::string& stage);
  const DESystem& transformed(const std::string& stage);
  const ReducedSystem& reduced(const std::string& stage);
  std::vector<AuxDef> aux_defs(const std::string& stage);
  /// Charts whose field is `field`.
  std::vector<std::string> charts_for(const std::string& field) const;

 private:
  const Problem& problem_;
  SampleConfig config_;
  std::optional<DESystem> parent_;
  std::map<std::string, PointTransformation> charts_;
  std::map<std::string, DESystem> transformed_;
  std::map<std::string, ReducedSystem> reduced_;
};

/// Runs one check; never throws.
Record run_check(Workspace& ws, const CheckDef& check, bool timing = false);

std::vector<Record> run_problem(const Problem& problem, const SampleConfig& config = {}, bool timing = false);

struct CorpusOptions {
  std::string filter;  // problem id or file stem; empty runs everything
  SampleConfig config;
  bool parallel = true;
  bool timing = false;
};

/// Every *.prob file in `directory`, in file-name order; records come out in
/// (file, check) order whatever the scheduling. Files that fail to load yield
/// one failing "load" record.
std::vector<Record> run_corpus(const std::filesystem::path& directory, const CorpusOptions& options = {});

bool all_passed(const std::vector<Record>& records);

}  // namespace liereduce
