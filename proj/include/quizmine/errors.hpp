#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quizmine {

enum class errc {
  // input / validation
  missing_file,
  parse_error,
  validation,
  inconsistent_titles,
  xml_syntax,
  unsupported_response_type,
  no_correct_choice,
  invalid_correct_count,
  type_mismatch,
  unscorable_drag_and_drop,
  no_attempts,
  empty_quiz,
  no_incorrect_attempts,
  excluded_type,
  too_few_cohorts,
  degenerate_matrix,
  missing_items,
  mismatched_ids,
  empty_transcripts,
  unknown_model_pricing,
  unknown_quiz_id,
  incomplete_inputs,
  invalid_argument,
  // runtime / environment
  auth,
  rate_limited,
  schema_violation,
  transport,
  context_too_large,
  io,
};

const char* errc_name(errc c);

/// True for error classes caused by bad inputs or violated invariants
/// (CLI exit 1); false for provider/transport/filesystem failures (exit 2).
bool is_validation_errc(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, std::vector<std::string> details = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        details_(std::move(details)) {}

  errc code() const { return code_; }

  /// Individual findings, e.g. one entry per violated manifest invariant.
  const std::vector<std::string>& details() const { return details_; }

  bool is_validation() const { return is_validation_errc(code_); }

 private:
  errc code_;
  std::vector<std::string> details_;
};

}  // namespace quizmine
