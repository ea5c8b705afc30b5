#include "quizmine/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>

#include "quizmine/errors.hpp"

namespace quizmine::ingest {

namespace pt = boost::property_tree;
using nlohmann::json;

namespace {

std::string collapse(const std::string& s) {
  std::string out;
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

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string ascii_lower(std::string s) {
  for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// Element text plus descendant element text, document order, collapsed.
void gather_text(const pt::ptree& node, std::string& out) {
  std::string own = node.get_value<std::string>();
  if (!trim(own).empty()) {
    if (!out.empty()) out.push_back(' ');
    out += own;
  }
  for (const auto& kid : node) {
    if (kid.first == "<xmlattr>" || kid.first == "<xmlcomment>") continue;
    gather_text(kid.second, out);
  }
}

std::string element_text(const pt::ptree& node) {
  std::string out;
  gather_text(node, out);
  return collapse(out);
}

bool attr_is_true(const pt::ptree& node, const char* name) {
  auto v = node.get_optional<std::string>(std::string("<xmlattr>.") + name);
  return v && ascii_lower(trim(*v)) == "true";
}

bool is_response_element(const std::string& name) {
  return name.size() > 8 && name.compare(name.size() - 8, 8, "response") == 0;
}

/// Parses an optionresponse options attribute: a comma-separated list of
/// quoted items, optionally wrapped in parentheses:  ('a','b','c')
std::vector<std::string> parse_options_attr(const std::string& raw,
                                            const std::string& qid) {
  std::string s = trim(raw);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<std::string> items;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
      ++i;
    if (i >= s.size()) break;
    char quote = s[i];
    if (quote == '\'' || quote == '"') {
      std::size_t end = s.find(quote, i + 1);
      if (end == std::string::npos)
        throw Error(errc::xml_syntax,
                    "question \"" + qid + "\": unterminated quote in options attribute");
      items.push_back(s.substr(i + 1, end - i - 1));
      i = end + 1;
    } else {
      std::size_t end = s.find(',', i);
      if (end == std::string::npos) end = s.size();
      items.push_back(trim(s.substr(i, end - i)));
      i = end;
    }
  }
  return items;
}

void parse_choice_group(const pt::ptree& response, const char* group_name,
                        QuestionRecord& record, const std::string& qid) {
  const pt::ptree* group = nullptr;
  for (const auto& kid : response)
    if (kid.first == group_name) group = &kid.second;
  if (!group)
    throw Error(errc::xml_syntax,
                "question \"" + qid + "\": missing <" + group_name + ">");
  int index = 0;
  for (const auto& kid : *group) {
    if (kid.first != "choice") continue;
    record.choices.push_back(element_text(kid.second));
    if (attr_is_true(kid.second, "correct")) record.correct_choices.insert(index);
    ++index;
  }
}

}  // namespace

const char* response_type_name(ResponseType t) {
  switch (t) {
    case ResponseType::multiple_choice: return "multiple choice";
    case ResponseType::checkbox: return "checkbox";
    case ResponseType::dropdown: return "dropdown";
    case ResponseType::short_answer: return "short answer";
    case ResponseType::drag_and_drop: return "drag and drop";
  }
  return "unknown";
}

std::optional<ResponseType> response_type_from_name(const std::string& name) {
  if (name == "multiple choice" || name == "multiple_choice") return ResponseType::multiple_choice;
  if (name == "checkbox") return ResponseType::checkbox;
  if (name == "dropdown") return ResponseType::dropdown;
  if (name == "short answer" || name == "short_answer") return ResponseType::short_answer;
  if (name == "drag and drop" || name == "drag_and_drop") return ResponseType::drag_and_drop;
  return std::nullopt;
}

ResponsePayload ResponsePayload::choices(std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  ResponsePayload p;
  p.choice_indices = std::move(idx);
  return p;
}

ResponsePayload ResponsePayload::of_text(std::string t) {
  ResponsePayload p;
  p.text = std::move(t);
  return p;
}

QuestionRecord parse_problem_xml(const std::string& xml_text,
                                 const std::string& question_id) {
  pt::ptree doc;
  try {
    std::istringstream in(xml_text);
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw Error(errc::xml_syntax, "question \"" + question_id + "\": XML error at line " +
                                      std::to_string(e.line()) + ": " + e.message());
  }
  auto problem = doc.get_child_optional("problem");
  if (!problem)
    throw Error(errc::xml_syntax,
                "question \"" + question_id + "\": root element must be <problem>");

  QuestionRecord record;
  record.question_id = question_id;

  std::vector<std::string> stem_parts;
  const pt::ptree* response = nullptr;
  std::string response_name;
  const pt::ptree* solution = nullptr;

  for (const auto& kid : *problem) {
    if (kid.first == "<xmlattr>" || kid.first == "<xmlcomment>") continue;
    if (is_response_element(kid.first)) {
      if (response)
        throw Error(errc::unsupported_response_type,
                    "question \"" + question_id + "\": more than one response element");
      response = &kid.second;
      response_name = kid.first;
      continue;
    }
    if (kid.first == "solution") {
      solution = &kid.second;
      continue;
    }
    if (!response && (kid.first == "p" || kid.first == "label")) {
      std::string text = element_text(kid.second);
      if (!text.empty()) stem_parts.push_back(text);
    }
  }
  if (!response)
    throw Error(errc::unsupported_response_type,
                "question \"" + question_id + "\": no response element found");

  // A <label> inside the response element is part of the stem.
  for (const auto& kid : *response) {
    if (kid.first == "label") {
      std::string text = element_text(kid.second);
      if (!text.empty()) stem_parts.push_back(text);
    }
  }
  std::string stem;
  for (const auto& part : stem_parts) {
    if (!stem.empty()) stem.push_back(' ');
    stem += part;
  }
  record.problem_stem = stem;

  if (response_name == "multiplechoiceresponse") {
    record.response_type = ResponseType::multiple_choice;
    parse_choice_group(*response, "choicegroup", record, question_id);
    if (record.correct_choices.empty())
      throw Error(errc::no_correct_choice,
                  "question \"" + question_id + "\": no choice marked correct");
    if (record.correct_choices.size() != 1)
      throw Error(errc::invalid_correct_count,
                  "question \"" + question_id +
                      "\": multiple choice requires exactly one correct choice");
  } else if (response_name == "choiceresponse") {
    record.response_type = ResponseType::checkbox;
    parse_choice_group(*response, "checkboxgroup", record, question_id);
    if (record.correct_choices.empty())
      throw Error(errc::no_correct_choice,
                  "question \"" + question_id + "\": no choice marked correct");
  } else if (response_name == "optionresponse") {
    record.response_type = ResponseType::dropdown;
    auto options = response->get_optional<std::string>("<xmlattr>.options");
    auto correct = response->get_optional<std::string>("<xmlattr>.correct");
    if (!options)
      throw Error(errc::xml_syntax,
                  "question \"" + question_id + "\": optionresponse missing options attribute");
    record.choices = parse_options_attr(*options, question_id);
    if (!correct)
      throw Error(errc::no_correct_choice,
                  "question \"" + question_id + "\": optionresponse missing correct attribute");
    auto it = std::find(record.choices.begin(), record.choices.end(), trim(*correct));
    if (it == record.choices.end())
      throw Error(errc::no_correct_choice,
                  "question \"" + question_id + "\": correct option \"" + *correct +
                      "\" not among options");
    record.correct_choices.insert(int(it - record.choices.begin()));
  } else if (response_name == "stringresponse") {
    record.response_type = ResponseType::short_answer;
    auto answer = response->get_optional<std::string>("<xmlattr>.answer");
    if (answer && !trim(*answer).empty()) record.accepted_answers.push_back(trim(*answer));
    for (const auto& kid : *response) {
      if (kid.first != "additional_answer") continue;
      auto extra = kid.second.get_optional<std::string>("<xmlattr>.answer");
      if (extra && !trim(*extra).empty()) record.accepted_answers.push_back(trim(*extra));
    }
    if (record.accepted_answers.empty())
      throw Error(errc::no_correct_choice,
                  "question \"" + question_id + "\": stringresponse has no accepted answers");
  } else if (response_name == "draganddropresponse") {
    record.response_type = ResponseType::drag_and_drop;
  } else {
    throw Error(errc::unsupported_response_type,
                "question \"" + question_id + "\": unsupported response element <" +
                    response_name + ">");
  }

  if (solution) record.explanation = element_text(*solution);
  return record;
}

ParsedLog parse_event_log(std::istream& stream) {
  ParsedLog out;
  std::string line;
  std::size_t line_no = 0;
  std::int64_t seq = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      out.rejects.push_back({line_no, "syntax: not a JSON object"});
      continue;
    }
    if (!j.is_object()) {
      out.rejects.push_back({line_no, "syntax: top-level value is not an object"});
      continue;
    }
    auto str_field = [&](const char* key) -> std::optional<std::string> {
      if (!j.contains(key) || !j[key].is_string()) return std::nullopt;
      return j[key].get<std::string>();
    };
    auto event_type = str_field("event_type");
    if (!event_type) {
      out.rejects.push_back({line_no, "missing event_type"});
      continue;
    }
    if (*event_type != "problem_check") {
      out.rejects.push_back({line_no, "unsupported event_type \"" + *event_type + "\""});
      continue;
    }
    auto username = str_field("username");
    auto problem_id = str_field("problem_id");
    auto time_text = str_field("time");
    auto run = str_field("run");
    if (!username || !problem_id || !time_text || !run) {
      out.rejects.push_back({line_no, "missing required field(s)"});
      continue;
    }
    if (!j.contains("answer")) {
      out.rejects.push_back({line_no, "missing answer"});
      continue;
    }
    AttemptEvent ev;
    ev.student_id = *username;
    ev.question_id = *problem_id;
    ev.run_label = *run;
    try {
      ev.timestamp = parse_iso8601(*time_text);
    } catch (const Error& e) {
      out.rejects.push_back({line_no, e.what()});
      continue;
    }
    const json& answer = j["answer"];
    if (answer.is_array()) {
      std::vector<int> idx;
      bool ok = true;
      for (const auto& v : answer) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
          ok = false;
          break;
        }
        idx.push_back(int(v.get<std::int64_t>()));
      }
      if (!ok) {
        out.rejects.push_back({line_no, "answer array must hold nonnegative integers"});
        continue;
      }
      ev.response = ResponsePayload::choices(std::move(idx));
    } else if (answer.is_string()) {
      ev.response = ResponsePayload::of_text(answer.get<std::string>());
    } else {
      out.rejects.push_back({line_no, "answer must be an integer array or a string"});
      continue;
    }
    if (j.contains("correct") && j["correct"].is_boolean())
      ev.response.platform_correct = j["correct"].get<bool>();
    ev.sequence_no = seq++;
    out.events.push_back(std::move(ev));
  }
  return out;
}

std::vector<AttemptEvent> concat_event_logs(const std::vector<ParsedLog>& logs) {
  std::vector<AttemptEvent> all;
  std::int64_t seq = 0;
  for (const auto& log : logs)
    for (const auto& ev : log.events) {
      all.push_back(ev);
      all.back().sequence_no = seq++;
    }
  return all;
}

bool score_response(const QuestionRecord& question, const ResponsePayload& response) {
  switch (question.response_type) {
    case ResponseType::multiple_choice:
    case ResponseType::dropdown:
    case ResponseType::checkbox: {
      if (!response.choice_indices)
        throw Error(errc::type_mismatch, "question \"" + question.question_id +
                                             "\" expects choice indices, got text");
      const auto& picked = *response.choice_indices;
      if (picked.size() != question.correct_choices.size()) return false;
      return std::equal(picked.begin(), picked.end(), question.correct_choices.begin());
    }
    case ResponseType::short_answer: {
      if (!response.text)
        throw Error(errc::type_mismatch, "question \"" + question.question_id +
                                             "\" expects text, got choice indices");
      std::string got = ascii_lower(trim(*response.text));
      for (const auto& accepted : question.accepted_answers)
        if (ascii_lower(trim(accepted)) == got) return true;
      return false;
    }
    case ResponseType::drag_and_drop: {
      if (response.platform_correct) return *response.platform_correct;
      throw Error(errc::unscorable_drag_and_drop,
                  "question \"" + question.question_id +
                      "\": drag-and-drop attempt lacks a platform correctness flag");
    }
  }
  throw Error(errc::invalid_argument, "unknown response type");
}

FirstAttemptTable derive_first_attempts(const std::vector<AttemptEvent>& events,
                                        const corpus::CourseManifest& manifest,
                                        const QuestionStore& questions) {
  // Set of manifest question ids for O(log n) membership.
  std::set<std::string> manifest_questions;
  for (const auto& quiz : manifest.quizzes)
    manifest_questions.insert(quiz.question_ids.begin(), quiz.question_ids.end());

  FirstAttemptTable table;
  std::map<std::pair<std::string, std::string>, const AttemptEvent*> best;
  for (const auto& ev : events) {
    if (!manifest_questions.count(ev.question_id)) {
      ++table.dropped_non_manifest;
      continue;
    }
    auto key = std::make_pair(ev.student_id, ev.question_id);
    auto [it, inserted] = best.emplace(key, &ev);
    if (!inserted) {
      const AttemptEvent* cur = it->second;
      if (std::make_pair(ev.timestamp, ev.sequence_no) <
          std::make_pair(cur->timestamp, cur->sequence_no))
        it->second = &ev;
    }
  }
  for (const auto& [key, ev] : best) {
    auto qit = questions.find(key.second);
    if (qit == questions.end()) {
      ++table.unscorable;
      continue;
    }
    try {
      bool correct = score_response(qit->second, ev->response);
      table.rows.emplace(key, FirstAttemptRow{*ev, correct});
    } catch (const Error&) {
      // Type mismatch or flagless drag-and-drop: excluded and counted.
      ++table.unscorable;
    }
  }
  return table;
}

}  // namespace quizmine::ingest
