#ifndef SEDAC_LLM_HPP
#define SEDAC_LLM_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedac/corpus.hpp"

namespace sedac {

// Chat-completion front end with record/replay.  Live calls hit a single
// JSON wire shape (system+user messages); everything vendor-specific is
// configuration.  Replay mode never touches the network, which keeps the
// whole pipeline bit-reproducible.

enum class PromptMode { Baseline, ZeroShot, OneShot, ChainOfThoughtOneShot };

const char* to_string(PromptMode m);
std::optional<PromptMode> prompt_mode_from(const std::string& name);

struct PromptTemplate {
  PromptMode mode = PromptMode::OneShot;
  std::string instruction;             // must contain "{problem}" once
  std::optional<std::string> example;  // required for one-shot modes
  static PromptTemplate standard(PromptMode mode);
};

struct MissingExampleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Byte-deterministic; the rendered problem text appears exactly once.
std::string render_prompt(const PromptTemplate& tmpl, const Problem& problem);
std::string render_prompt(PromptMode mode, const Problem& problem);

// Flowing problem text as it appears inside prompts.
std::string problem_text(const Problem& problem);

struct Transcript {
  std::string problem_id;
  PromptMode mode = PromptMode::OneShot;
  std::string model;
  int trial = 0;
  std::string prompt;
  std::string response;
  std::string timestamp;  // recorded at capture time; empty in fixtures
};

// One JSON file per transcript in a content-addressed directory; the name is
// a 64-bit FNV-1a of (problem id, mode, model, trial).
class TranscriptStore {
 public:
  explicit TranscriptStore(std::string dir);

  std::optional<Transcript> get(const std::string& problem_id, PromptMode mode,
                                const std::string& model, int trial) const;
  void put(const Transcript& t) const;
  std::string path_for(const std::string& problem_id, PromptMode mode,
                       const std::string& model, int trial) const;
  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
};

std::uint64_t fnv1a64(std::string_view data);

struct EndpointConfig {
  std::string base_url;   // e.g. http://localhost:8080
  std::string path = "/v1/chat/completions";
  std::string model = "unknown";
  std::string api_key_env = "SEDAC_API_KEY";
  double temperature = 0.0;
  int max_attempts = 3;
  int backoff_ms = 250;       // doubled per retry
  int min_interval_ms = 0;    // per-endpoint rate limit between requests

  static EndpointConfig from_json_file(const std::string& path);
};

struct TranslateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Translator {
 public:
  // Replay-only translator: cache misses are errors.  `replay_model` is the
  // model name transcripts were recorded under.
  explicit Translator(TranscriptStore store,
                      std::string replay_model = "fixture");
  // Live translator: missing transcripts are fetched and recorded.
  Translator(TranscriptStore store, EndpointConfig endpoint);

  // Test hook: when set, any attempt to open a connection throws.
  void forbid_network(bool on) { forbid_network_ = on; }

  Transcript translate(const Problem& problem, PromptMode mode, int trial = 0);

  // Bounded-parallel batch; results in problem order.  Failures surface as
  // TranslateError carrying the problem id.
  std::vector<Transcript> translate_batch(const std::vector<Problem>& problems,
                                          PromptMode mode, int trial = 0,
                                          int max_parallel = 4);

 private:
  Transcript fetch_live(const Problem& problem, PromptMode mode, int trial);
  void rate_limit();

  TranscriptStore store_;
  std::optional<EndpointConfig> endpoint_;
  std::string replay_model_ = "fixture";
  bool forbid_network_ = false;
  std::mutex rate_mutex_;
  std::chrono::steady_clock::time_point last_request_{};
};

// The worked translation example embedded in one-shot prompts, and the
// canned instruction header; exposed for tests.
extern const char* const kTranslationExample;
extern const char* const kTranslationRules;

}  // namespace sedac

#endif  // SEDAC_LLM_HPP
