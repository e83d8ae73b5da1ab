#include "sedac/llm.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <mutex>
#include <semaphore>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace sedac {

const char* to_string(PromptMode m) {
  switch (m) {
    case PromptMode::Baseline: return "baseline";
    case PromptMode::ZeroShot: return "zero_shot";
    case PromptMode::OneShot: return "one_shot";
    case PromptMode::ChainOfThoughtOneShot: return "cot_one_shot";
  }
  return "?";
}

std::optional<PromptMode> prompt_mode_from(const std::string& name) {
  if (name == "baseline") return PromptMode::Baseline;
  if (name == "zero_shot") return PromptMode::ZeroShot;
  if (name == "one_shot") return PromptMode::OneShot;
  if (name == "cot_one_shot") return PromptMode::ChainOfThoughtOneShot;
  return std::nullopt;
}

const char* const kTranslationRules =
    "Convert the given English statements into a Prolog program.\n"
    "Use the format and rules below, including an example for guidance. \n"
    "**Format and Rules:**\n"
    "- Specific statements become facts: 'Whiskers is a cat' -> 'cat(whiskers).'\n"
    "- General 'is a' statements become rules: 'All cats are birds' -> 'bird(X) :- cat(X).'\n"
    "- Use '\\+' for negations: 'No bird swims' -> '\\+swims(X) :- bird(X).'\n"
    "- Frame queries with '?-': 'Does Whiskers swim?' -> '?- swims(whiskers).'\n";

const char* const kTranslationExample =
    "**Example:**\n"
    "English: 'All cats are birds. No bird swims. Whiskers is a cat. Does Whiskers swim?'\n"
    "Problog: cat(whiskers).\n"
    "bird(X) :- cat(X).\n"
    "\\+swims(X) :- bird(X).\n"
    "?- swims(whiskers).\n";

std::string problem_text(const Problem& problem) {
  std::string text;
  for (std::size_t i = 0; i < problem.nl.statements.size(); ++i) {
    if (i) text += " ";
    text += problem.nl.statements[i];
  }
  text += "\n\n" + problem.nl.query_sentence;
  return text;
}

PromptTemplate PromptTemplate::standard(PromptMode mode) {
  PromptTemplate t;
  t.mode = mode;
  switch (mode) {
    case PromptMode::Baseline:
      t.instruction =
          "Answer the following question using only the statements given.\n"
          "Reply with exactly one word: True or False.\n\n{problem}\n";
      break;
    case PromptMode::ChainOfThoughtOneShot:
      t.instruction =
          "Answer the following question using only the statements given.\n"
          "Think step by step, then end your reply with a single line\n"
          "'Answer: True' or 'Answer: False'.\n\n{example}\n{problem}\n";
      t.example =
          "**Example:**\n"
          "Question: 'All cats are birds. No bird swims. Whiskers is a cat. "
          "True or false: Whiskers swims.'\n"
          "Whiskers is a cat, every cat is a bird, and no bird swims, so "
          "Whiskers does not swim.\n"
          "Answer: False\n";
      break;
    case PromptMode::ZeroShot:
      t.instruction = std::string(kTranslationRules) +
                      "Now, convert the following statements into a Prolog program:\n"
                      "Question: '{problem}'\n"
                      "Problog Program:\n";
      break;
    case PromptMode::OneShot:
      t.instruction = std::string(kTranslationRules) + "\n{example}" +
                      "Now, convert the following statements into a Prolog program:\n"
                      "Question: '{problem}'\n"
                      "Problog Program:\n";
      t.example = kTranslationExample;
      break;
  }
  return t;
}

namespace {

std::string replace_once(const std::string& text, const std::string& marker,
                         const std::string& value) {
  auto at = text.find(marker);
  if (at == std::string::npos) return text;
  std::string out = text;
  out.replace(at, marker.size(), value);
  return out;
}

}  // namespace

std::string render_prompt(const PromptTemplate& tmpl, const Problem& problem) {
  bool needs_example = tmpl.instruction.find("{example}") != std::string::npos;
  if (needs_example && !tmpl.example)
    throw MissingExampleError("prompt mode '" +
                              std::string(to_string(tmpl.mode)) +
                              "' requires a worked example");
  std::string out = tmpl.instruction;
  if (needs_example) out = replace_once(out, "{example}", *tmpl.example);
  std::string text = problem_text(problem);
  if (out.find("{problem}") == std::string::npos)
    throw std::runtime_error("prompt template lacks a {problem} placeholder");
  out = replace_once(out, "{problem}", text);
  if (out.find(text, 0) == std::string::npos ||
      out.find(text, out.find(text) + 1) != std::string::npos)
    throw std::runtime_error("rendered prompt must contain the problem exactly once");
  return out;
}

std::string render_prompt(PromptMode mode, const Problem& problem) {
  return render_prompt(PromptTemplate::standard(mode), problem);
}

// ── transcript store ────────────────────────────────────────────────────────

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

TranscriptStore::TranscriptStore(std::string dir) : dir_(std::move(dir)) {}

std::string TranscriptStore::path_for(const std::string& problem_id,
                                      PromptMode mode, const std::string& model,
                                      int trial) const {
  std::string key = problem_id + "|" + to_string(mode) + "|" + model + "|" +
                    std::to_string(trial);
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(key);
  return dir_ + "/" + name.str() + ".json";
}

std::optional<Transcript> TranscriptStore::get(const std::string& problem_id,
                                               PromptMode mode,
                                               const std::string& model,
                                               int trial) const {
  std::ifstream in(path_for(problem_id, mode, model, trial), std::ios::binary);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    Transcript t;
    t.problem_id = j.at("problem_id").get<std::string>();
    auto m = prompt_mode_from(j.at("mode").get<std::string>());
    if (!m) return std::nullopt;
    t.mode = *m;
    t.model = j.at("model").get<std::string>();
    t.trial = j.at("trial").get<int>();
    t.prompt = j.value("prompt", "");
    t.response = j.at("response").get<std::string>();
    t.timestamp = j.value("timestamp", "");
    return t;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void TranscriptStore::put(const Transcript& t) const {
  std::filesystem::create_directories(dir_);
  nlohmann::json j;
  j["problem_id"] = t.problem_id;
  j["mode"] = to_string(t.mode);
  j["model"] = t.model;
  j["trial"] = t.trial;
  j["prompt"] = t.prompt;
  j["response"] = t.response;
  j["timestamp"] = t.timestamp;
  std::ofstream out(path_for(t.problem_id, t.mode, t.model, t.trial),
                    std::ios::binary);
  if (!out)
    throw TranslateError("cannot write transcript for " + t.problem_id);
  out << j.dump(2) << "\n";
}

// ── endpoint ────────────────────────────────────────────────────────────────

EndpointConfig EndpointConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TranslateError("cannot open endpoint config: " + path);
  nlohmann::json j;
  in >> j;
  EndpointConfig c;
  c.base_url = j.at("base_url").get<std::string>();
  c.path = j.value("path", c.path);
  c.model = j.value("model", c.model);
  c.api_key_env = j.value("api_key_env", c.api_key_env);
  c.temperature = j.value("temperature", c.temperature);
  c.max_attempts = j.value("max_attempts", c.max_attempts);
  c.backoff_ms = j.value("backoff_ms", c.backoff_ms);
  c.min_interval_ms = j.value("min_interval_ms", c.min_interval_ms);
  return c;
}

Translator::Translator(TranscriptStore store, std::string replay_model)
    : store_(std::move(store)), replay_model_(std::move(replay_model)) {}

Translator::Translator(TranscriptStore store, EndpointConfig endpoint)
    : store_(std::move(store)), endpoint_(std::move(endpoint)) {}

Transcript Translator::translate(const Problem& problem, PromptMode mode,
                                 int trial) {
  std::string model = endpoint_ ? endpoint_->model : replay_model_;
  if (auto hit = store_.get(problem.id, mode, model, trial)) return *hit;
  if (!endpoint_)
    throw TranslateError("no transcript for problem " + problem.id + " (" +
                         to_string(mode) + ", trial " + std::to_string(trial) +
                         ") in " + store_.dir());
  Transcript t = fetch_live(problem, mode, trial);
  store_.put(t);
  return t;
}

void Translator::rate_limit() {
  if (!endpoint_ || endpoint_->min_interval_ms <= 0) return;
  std::lock_guard lock(rate_mutex_);
  auto interval = std::chrono::milliseconds(endpoint_->min_interval_ms);
  auto now = std::chrono::steady_clock::now();
  if (last_request_.time_since_epoch().count() != 0 &&
      now - last_request_ < interval)
    std::this_thread::sleep_for(interval - (now - last_request_));
  last_request_ = std::chrono::steady_clock::now();
}

Transcript Translator::fetch_live(const Problem& problem, PromptMode mode,
                                  int trial) {
  if (forbid_network_)
    throw TranslateError("network access forbidden but problem " + problem.id +
                         " is not in the transcript store");
  std::string prompt = render_prompt(mode, problem);
  nlohmann::json body;
  body["model"] = endpoint_->model;
  body["temperature"] = endpoint_->temperature;
  body["messages"] = nlohmann::json::array(
      {{{"role", "system"},
        {"content", "You are a careful translator from English to logic programs."}},
       {{"role", "user"}, {"content", prompt}}});

  httplib::Client client(endpoint_->base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(60);
  httplib::Headers headers;
  if (const char* key = std::getenv(endpoint_->api_key_env.c_str()))
    headers.emplace("Authorization", std::string("Bearer ") + key);

  std::string failure;
  int backoff = endpoint_->backoff_ms;
  for (int attempt = 1; attempt <= endpoint_->max_attempts; ++attempt) {
    rate_limit();
    auto res = client.Post(endpoint_->path, headers, body.dump(),
                           "application/json");
    if (!res) {
      failure = "connection error (" + httplib::to_string(res.error()) + ")";
    } else if (res->status == 401 || res->status == 403) {
      throw TranslateError("authentication failed for problem " + problem.id +
                           ": HTTP " + std::to_string(res->status));
    } else if (res->status != 200) {
      failure = "HTTP " + std::to_string(res->status);
    } else {
      try {
        nlohmann::json j = nlohmann::json::parse(res->body);
        Transcript t;
        t.problem_id = problem.id;
        t.mode = mode;
        t.model = endpoint_->model;
        t.trial = trial;
        t.prompt = prompt;
        t.response =
            j.at("choices").at(0).at("message").at("content").get<std::string>();
        auto now = std::chrono::system_clock::now().time_since_epoch();
        t.timestamp = std::to_string(
            std::chrono::duration_cast<std::chrono::seconds>(now).count());
        return t;
      } catch (const nlohmann::json::exception& e) {
        failure = std::string("malformed response: ") + e.what();
      }
    }
    if (attempt < endpoint_->max_attempts) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
      backoff *= 2;
    }
  }
  throw TranslateError("translation failed for problem " + problem.id + ": " +
                       failure);
}

std::vector<Transcript> Translator::translate_batch(
    const std::vector<Problem>& problems, PromptMode mode, int trial,
    int max_parallel) {
  std::vector<Transcript> out(problems.size());
  if (!endpoint_) {
    // replay: sequential and deterministic
    for (std::size_t i = 0; i < problems.size(); ++i)
      out[i] = translate(problems[i], mode, trial);
    return out;
  }
  std::counting_semaphore<64> slots(std::max(1, std::min(max_parallel, 64)));
  std::vector<std::future<void>> jobs;
  std::mutex first_error_mutex;
  std::exception_ptr first_error;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      slots.acquire();
      try {
        out[i] = translate(problems[i], mode, trial);
      } catch (...) {
        std::lock_guard lock(first_error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
      slots.release();
    }));
  }
  for (auto& j : jobs) j.wait();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace sedac
