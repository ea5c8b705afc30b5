#include "quizmine/corpus.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quizmine/errors.hpp"

namespace quizmine::corpus {

namespace {

using nlohmann::json;

std::string collapse_whitespace(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = false;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(char(c));
  }
  return out;
}

const std::regex& part_suffix_regex() {
  // " - Part N" | " Part N" | "(Part N)", anchored at end of title.
  static const std::regex re(
      R"((( -\s*[Pp][Aa][Rr][Tt] [1-9][0-9]*)|( [Pp][Aa][Rr][Tt] [1-9][0-9]*)|(\s*\(\s*[Pp][Aa][Rr][Tt] [1-9][0-9]*\s*\)))\s*$)");
  return re;
}

json parse_json_or_throw(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; derive the line for the diagnostic.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(errc::parse_error, where + ": JSON parse error at line " +
                                       std::to_string(line) + ", column " +
                                       std::to_string(col) + ": " + e.what());
  }
}

}  // namespace

const QuizSpec* CourseManifest::find_quiz(const std::string& quiz_id) const {
  for (const auto& q : quizzes)
    if (q.quiz_id == quiz_id) return &q;
  return nullptr;
}

const QuizSpec* CourseManifest::quiz_of_question(const std::string& question_id) const {
  for (const auto& q : quizzes)
    for (const auto& id : q.question_ids)
      if (id == question_id) return &q;
  return nullptr;
}

std::size_t CourseManifest::total_questions() const {
  std::size_t n = 0;
  for (const auto& q : quizzes) n += q.question_ids.size();
  return n;
}

std::filesystem::path CourseManifest::transcript_path(const std::string& transcript_id) const {
  auto it = transcripts.find(transcript_id);
  if (it == transcripts.end())
    throw Error(errc::validation, "unknown transcript id \"" + transcript_id + "\"");
  std::filesystem::path p(it->second);
  return p.is_absolute() ? p : base_dir / p;
}

std::string normalize_title(const std::string& title) {
  std::string t = collapse_whitespace(title);
  std::smatch m;
  while (std::regex_search(t, m, part_suffix_regex()) && m.position(0) > 0) {
    t.erase(std::size_t(m.position(0)));
    t = collapse_whitespace(t);
  }
  return t;
}

TopicId normalize_topic(const std::vector<std::string>& lecture_titles) {
  if (lecture_titles.empty())
    throw Error(errc::invalid_argument, "normalize_topic: empty title list");
  std::string canonical = normalize_title(lecture_titles.front());
  for (std::size_t i = 1; i < lecture_titles.size(); ++i) {
    std::string other = normalize_title(lecture_titles[i]);
    if (other != canonical)
      throw Error(errc::inconsistent_titles,
                  "lecture titles normalize to different topics: \"" + canonical +
                      "\" vs \"" + other + "\"");
  }
  return TopicId{canonical};
}

CourseManifest parse_manifest(const std::string& json_text,
                              const std::filesystem::path& base_dir) {
  json j = parse_json_or_throw(json_text, "manifest");
  CourseManifest m;
  m.base_dir = base_dir;
  std::vector<std::string> issues;

  auto require_string = [&](const json& node, const char* key, const std::string& ctx) {
    if (!node.contains(key) || !node[key].is_string()) {
      issues.push_back(ctx + ": missing or non-string \"" + key + "\"");
      return std::string();
    }
    return node[key].get<std::string>();
  };

  m.course_type = require_string(j, "course_type", "manifest");

  if (j.contains("cohorts") && j["cohorts"].is_array()) {
    for (const auto& c : j["cohorts"]) {
      CohortSpec spec;
      spec.label = require_string(c, "label", "cohort");
      if (c.contains("runs") && c["runs"].is_array())
        for (const auto& r : c["runs"]) spec.course_runs.push_back(r.get<std::string>());
      if (c.contains("enrollment_count")) {
        spec.enrollment_count = c["enrollment_count"].get<std::int64_t>();
        if (spec.enrollment_count < 0)
          issues.push_back("cohort \"" + spec.label + "\": negative enrollment_count");
      }
      m.cohorts.push_back(std::move(spec));
    }
  } else {
    issues.push_back("manifest: missing \"cohorts\" array");
  }

  if (j.contains("quizzes") && j["quizzes"].is_array()) {
    for (const auto& q : j["quizzes"]) {
      QuizSpec spec;
      spec.quiz_id = require_string(q, "quiz_id", "quiz");
      auto read_list = [&](const char* key, std::vector<std::string>& out) {
        if (q.contains(key) && q[key].is_array())
          for (const auto& v : q[key]) out.push_back(v.get<std::string>());
      };
      read_list("lecture_titles", spec.lecture_titles);
      read_list("question_ids", spec.question_ids);
      read_list("transcript_ids", spec.transcript_ids);
      m.quizzes.push_back(std::move(spec));
    }
  } else {
    issues.push_back("manifest: missing \"quizzes\" array");
  }

  if (j.contains("transcripts") && j["transcripts"].is_object()) {
    for (auto it = j["transcripts"].begin(); it != j["transcripts"].end(); ++it)
      m.transcripts[it.key()] = it.value().get<std::string>();
  }

  // Invariant sweep: collect every violation before failing.
  std::set<std::string> cohort_labels;
  for (const auto& c : m.cohorts)
    if (!cohort_labels.insert(c.label).second)
      issues.push_back("duplicate cohort label \"" + c.label + "\"");

  std::set<std::string> question_ids;
  for (const auto& q : m.quizzes) {
    if (q.question_ids.empty())
      issues.push_back("quiz \"" + q.quiz_id + "\": question_ids empty");
    if (q.lecture_titles.empty())
      issues.push_back("quiz \"" + q.quiz_id + "\": lecture_titles empty");
    for (const auto& id : q.question_ids)
      if (!question_ids.insert(id).second)
        issues.push_back("question id \"" + id + "\" referenced by more than one quiz");
    for (const auto& tid : q.transcript_ids)
      if (!m.transcripts.count(tid))
        issues.push_back("quiz \"" + q.quiz_id + "\": unknown transcript id \"" + tid + "\"");
    if (!q.lecture_titles.empty()) {
      try {
        normalize_topic(q.lecture_titles);
      } catch (const Error& e) {
        issues.push_back("quiz \"" + q.quiz_id + "\": " + e.what());
      }
    }
  }

  if (!issues.empty()) {
    std::ostringstream msg;
    msg << "manifest validation failed with " << issues.size() << " issue(s)";
    throw Error(errc::validation, msg.str(), issues);
  }
  return m;
}

CourseManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(errc::missing_file, "manifest file not found: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.parent_path());
}

}  // namespace quizmine::corpus
