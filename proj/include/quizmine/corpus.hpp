#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace quizmine::corpus {

/// Canonical topic identity: the lecture title with any trailing part
/// designator stripped and internal whitespace collapsed.
struct TopicId {
  std::string canonical_title;

  auto operator<=>(const TopicId&) const = default;
};

struct CohortSpec {
  std::string label;
  std::vector<std::string> course_runs;
  std::int64_t enrollment_count = 0;

  bool operator==(const CohortSpec&) const = default;
};

struct QuizSpec {
  std::string quiz_id;
  std::vector<std::string> lecture_titles;
  std::vector<std::string> question_ids;
  std::vector<std::string> transcript_ids;

  bool operator==(const QuizSpec&) const = default;
};

/// The single source of the quiz -> question -> transcript structure.
/// Immutable after load; shared read-only across pipeline stages.
struct CourseManifest {
  std::string course_type;
  std::vector<CohortSpec> cohorts;
  std::vector<QuizSpec> quizzes;
  std::map<std::string, std::string> transcripts;  // id -> path, manifest-relative
  std::filesystem::path base_dir;                  // directory the manifest was loaded from

  bool operator==(const CourseManifest& o) const {
    return course_type == o.course_type && cohorts == o.cohorts &&
           quizzes == o.quizzes && transcripts == o.transcripts;
  }

  const QuizSpec* find_quiz(const std::string& quiz_id) const;
  /// Quiz owning a question id, or nullptr for non-manifest questions.
  const QuizSpec* quiz_of_question(const std::string& question_id) const;
  std::size_t total_questions() const;
  std::filesystem::path transcript_path(const std::string& transcript_id) const;
};

/// Strips trailing part designators (" - Part N", " Part N", "(Part N)",
/// case-insensitive, N a positive integer) after whitespace collapse.
/// Idempotent: designators are stripped until none remain.
std::string normalize_title(const std::string& title);

/// All titles must normalize to the same canonical string; throws
/// Error(inconsistent_titles) otherwise, Error(invalid_argument) when empty.
TopicId normalize_topic(const std::vector<std::string>& lecture_titles);

/// Loads and validates a manifest file. Validation is exhaustive: every
/// violated invariant is reported in Error::details, not just the first.
CourseManifest load_manifest(const std::filesystem::path& path);

/// Parses manifest JSON text; `base_dir` anchors relative transcript paths.
CourseManifest parse_manifest(const std::string& json_text,
                              const std::filesystem::path& base_dir);

}  // namespace quizmine::corpus
