#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quizmine/corpus.hpp"
#include "quizmine/timeutil.hpp"

namespace quizmine::ingest {

enum class ResponseType {
  multiple_choice,
  checkbox,
  dropdown,
  short_answer,
  drag_and_drop,
};

/// Serialized names used in prompt records and report output
/// ("multiple choice", "checkbox", ...).
const char* response_type_name(ResponseType t);
std::optional<ResponseType> response_type_from_name(const std::string& name);

struct QuestionRecord {
  std::string question_id;
  std::string problem_stem;
  ResponseType response_type = ResponseType::multiple_choice;
  std::vector<std::string> choices;        // empty for short_answer / drag_and_drop
  std::set<int> correct_choices;           // choice types
  std::vector<std::string> accepted_answers;  // short_answer
  std::string explanation;

  bool operator==(const QuestionRecord&) const = default;

  bool excluded_from_misconceptions() const {
    return response_type == ResponseType::drag_and_drop;
  }
};

/// Exactly one of `choice_indices` / `text` is populated. `platform_correct`
/// carries the log's optional correctness flag; scoring consults it only for
/// drag-and-drop questions.
struct ResponsePayload {
  std::optional<std::vector<int>> choice_indices;  // kept sorted, deduplicated
  std::optional<std::string> text;
  std::optional<bool> platform_correct;

  bool operator==(const ResponsePayload&) const = default;

  static ResponsePayload choices(std::vector<int> idx);
  static ResponsePayload of_text(std::string t);
};

struct AttemptEvent {
  std::string student_id;
  std::string question_id;
  Instant timestamp;
  std::int64_t sequence_no = 0;  // strictly increasing in read order
  ResponsePayload response;
  std::string run_label;

  bool operator==(const AttemptEvent&) const = default;
};

struct RejectedLine {
  std::size_t line_no = 0;  // 1-based
  std::string reason;
};

struct ParsedLog {
  std::vector<AttemptEvent> events;
  std::vector<RejectedLine> rejects;
};

struct FirstAttemptRow {
  AttemptEvent event;
  bool correct = false;
};

/// Earliest attempt per (student, question); minimum timestamp wins,
/// sequence_no breaks ties.
struct FirstAttemptTable {
  std::map<std::pair<std::string, std::string>, FirstAttemptRow> rows;
  std::int64_t dropped_non_manifest = 0;
  std::int64_t unscorable = 0;  // drag-and-drop attempts without a platform flag
};

using QuestionStore = std::map<std::string, QuestionRecord>;

/// Parses one problem document (the OLX-style dialect described in the
/// README) into a QuestionRecord. Throws Error with code xml_syntax,
/// unsupported_response_type, no_correct_choice or invalid_correct_count.
QuestionRecord parse_problem_xml(const std::string& xml_text,
                                 const std::string& question_id);

/// Parses a line-oriented event log. Malformed or non-problem_check lines are
/// quarantined in `rejects` (1-based line number + reason); never throws on
/// content. A fully rejected stream is a valid empty result.
ParsedLog parse_event_log(std::istream& stream);

/// Concatenates per-file parses in order, renumbering sequence_no so the
/// tie-break order matches the concatenation order.
std::vector<AttemptEvent> concat_event_logs(const std::vector<ParsedLog>& logs);

/// True iff the response is correct for the question. Checkbox is exact set
/// match; short answers compare case-insensitively after trimming.
/// Drag-and-drop is scorable only via the platform flag.
/// Throws Error(type_mismatch) or Error(unscorable_drag_and_drop).
bool score_response(const QuestionRecord& question, const ResponsePayload& response);

/// Keeps the minimum-(timestamp, sequence_no) event per (student, question)
/// over manifest questions; total function, never throws on event content.
FirstAttemptTable derive_first_attempts(const std::vector<AttemptEvent>& events,
                                        const corpus::CourseManifest& manifest,
                                        const QuestionStore& questions);

}  // namespace quizmine::ingest
