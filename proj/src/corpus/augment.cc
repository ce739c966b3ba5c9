//
// Copyright 2026 The Stratintent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "stratintent/corpus/augment.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "stratintent/risk/game_map.h"

namespace stratintent::corpus {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }
char upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = lower(c);
  return out;
}

constexpr std::array<std::string_view, 10> kAbbreviations = {
    "e.g", "i.e", "etc", "vs", "mr", "mrs", "ms", "dr", "approx", "cf"};

// True when the period at `pos` ends an abbreviation or an initial.
bool is_abbreviation(std::string_view text, size_t pos) {
  size_t start = pos;
  while (start > 0 && (is_alpha(text[start - 1]) || text[start - 1] == '.')) {
    --start;
  }
  const std::string word = to_lower(text.substr(start, pos - start));
  if (word.empty()) return false;
  if (std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
      kAbbreviations.end()) {
    return true;
  }
  const bool lone = start == 0 || is_space(text[start - 1]);
  return lone && word.size() == 1 && word != "i" && word != "a";
}

bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  for (size_t i = 0; i < s.size();) {
    const unsigned char c = s[i];
    int extra = c >= 0xF0 ? 3 : c >= 0xE0 ? 2 : c >= 0xC0 ? 1 : 0;
    char32_t cp = extra == 0 ? c : c & (0x3F >> extra);
    ++i;
    for (; extra > 0 && i < s.size(); --extra, ++i) {
      cp = (cp << 6) | (static_cast<unsigned char>(s[i]) & 0x3F);
    }
    out.push_back(cp);
  }
  return out;
}

struct Phrase {
  std::string_view from;
  std::vector<std::string_view> to;
};

// Longest phrases first so multi-word entries win over their parts.
const std::vector<Phrase>& synonym_table() {
  static const std::vector<Phrase> table = [] {
    std::vector<Phrase> t = {
        {"i would like to", {"I'd like to", "I want to"}},
        {"no fewer than", {"at least", "a minimum of"}},
        {"no more than", {"at most", "not more than"}},
        {"at least", {"no fewer than", "a minimum of"}},
        {"at most", {"no more than", "not more than"}},
        {"would rather", {"prefer to"}},
        {"right away", {"immediately", "at once"}},
        {"for now", {"for the time being", "at the moment"}},
        {"plan to", {"intend to", "aim to"}},
        {"intend to", {"plan to", "aim to"}},
        {"need to", {"have to", "must"}},
        {"have to", {"need to", "must"}},
        {"i am", {"I'm"}},
        {"i will", {"I'll", "I shall"}},
        {"do not", {"don't"}},
        {"is not", {"isn't"}},
        {"or more", {"or even more"}},
        {"a lot", {"greatly", "a great deal"}},
        {"troops", {"soldiers", "forces", "units"}},
        {"want", {"would like", "wish"}},
        {"must", {"have to", "need to"}},
        {"plan", {"strategy", "approach"}},
        {"territories", {"regions", "lands"}},
        {"countries", {"territories", "regions"}},
        {"territory", {"region", "country"}},
        {"country", {"territory", "region"}},
        {"single", {"lone", "solitary"}},
        {"important", {"key", "significant"}},
        {"priority", {"focus", "main concern"}},
        {"enemy", {"opponent", "rival"}},
        {"enemies", {"opponents", "rivals"}},
        {"opponents", {"rivals", "enemies"}},
        {"opponent", {"rival", "enemy"}},
        {"battles", {"fights", "clashes"}},
        {"fights", {"battles", "clashes"}},
        {"avoid", {"steer clear of", "stay away from"}},
        {"hold", {"keep", "control"}},
        {"army", {"force", "host"}},
        {"essential", {"vital", "critical"}},
        {"crucial", {"vital", "critical"}},
        {"entirely", {"completely", "altogether"}},
        {"placed", {"put", "positioned"}},
        {"place", {"put", "position"}},
        {"defend", {"protect", "guard"}},
        {"defended", {"protected", "guarded"}},
        {"protect", {"defend", "guard"}},
        {"borders", {"frontiers", "boundaries"}},
        {"occupy", {"take", "hold"}},
        {"main", {"primary", "chief"}},
        {"helpful", {"useful", "handy"}},
        {"helps", {"is useful", "pays off"}},
        {"fairly", {"reasonably", "quite"}},
        {"somewhat", {"a bit", "slightly"}},
        {"i think", {"I believe", "I feel"}},
    };
    std::stable_sort(t.begin(), t.end(), [](const Phrase& a, const Phrase& b) {
      return a.from.size() > b.from.size();
    });
    return t;
  }();
  return table;
}

bool matches_at(std::string_view s, size_t pos, std::string_view phrase) {
  if (pos + phrase.size() > s.size()) return false;
  if (pos > 0 && (is_alnum(s[pos - 1]) || s[pos - 1] == '_')) return false;
  const size_t end = pos + phrase.size();
  if (end < s.size() && (is_alnum(s[end]) || s[end] == '_' || s[end] == '\'')) {
    return false;
  }
  for (size_t i = 0; i < phrase.size(); ++i) {
    if (lower(s[pos + i]) != phrase[i]) return false;
  }
  return true;
}

std::string substitute(const std::string& s, Rng& rng) {
  std::string out;
  size_t pos = 0;
  while (pos < s.size()) {
    const Phrase* hit = nullptr;
    for (const Phrase& p : synonym_table()) {
      if (matches_at(s, pos, p.from)) {
        hit = &p;
        break;
      }
    }
    if (hit == nullptr) {
      out += s[pos++];
      continue;
    }
    const size_t len = hit->from.size();
    if (rng.uniform(2) == 0) {
      out.append(s, pos, len);
    } else {
      std::string rep(rng.pick(hit->to));
      if (std::isupper(static_cast<unsigned char>(s[pos]))) rep[0] = upper(rep[0]);
      out += rep;
    }
    pos += len;
  }
  return out;
}

bool keeps_capital(std::string_view word) {
  if (word == "I" || word.rfind("I'", 0) == 0) return true;
  for (auto name : risk::continent_names()) {
    if (word.rfind(name, 0) == 0) return true;
  }
  return false;
}

std::string decapitalize(std::string s) {
  const size_t space = s.find(' ');
  if (!s.empty() && !keeps_capital(std::string_view(s).substr(0, space))) {
    s[0] = lower(s[0]);
  }
  return s;
}

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = upper(s[0]);
  return s;
}

// "A because B." <-> "Because B, a."
std::optional<std::string> reorder(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const char stop = s.back();
  if (stop != '.' && stop != '!' && stop != '?') return std::nullopt;
  const std::string body = s.substr(0, s.size() - 1);
  for (std::string_view conj : {"because", "since"}) {
    const std::string mid = " " + std::string(conj) + " ";
    const size_t at = body.find(mid);
    if (at != std::string::npos && at > 0) {
      std::string head = body.substr(0, at);
      if (!head.empty() && head.back() == ',') head.pop_back();
      const std::string tail = body.substr(at + mid.size());
      if (tail.find(',') != std::string::npos) return std::nullopt;
      return capitalize(std::string(conj)) + " " + tail + ", " + decapitalize(head) + stop;
    }
    if (to_lower(body).rfind(std::string(conj) + " ", 0) == 0) {
      const size_t comma = body.find(", ");
      if (comma == std::string::npos) return std::nullopt;
      const std::string clause = body.substr(conj.size() + 1, comma - conj.size() - 1);
      const std::string rest = body.substr(comma + 2);
      return capitalize(rest) + " " + std::string(conj) + " " + clause + stop;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<SentenceSpan> split_sentences(std::string_view text) {
  std::vector<SentenceSpan> spans;
  size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip_space();
  size_t begin = i;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '.' || c == '?' || c == '!') {
      size_t end = i + 1;
      while (end < text.size() &&
             (text[end] == '.' || text[end] == '?' || text[end] == '!')) {
        ++end;
      }
      while (end < text.size() && is_closer(text[end])) ++end;
      const bool boundary = end == text.size() || is_space(text[end]);
      if (boundary && !(c == '.' && end == i + 1 && is_abbreviation(text, i))) {
        spans.push_back({begin, end});
        i = end;
        skip_space();
        begin = i;
        continue;
      }
      i = end;
      continue;
    }
    ++i;
  }
  if (begin < text.size()) {
    size_t end = text.size();
    while (end > begin && is_space(text[end - 1])) --end;
    spans.push_back({begin, end});
  }
  return spans;
}

std::vector<std::string> RuleParaphraser::paraphrase(const std::string& sentence,
                                                     Rng& rng) const {
  std::vector<std::string> out;
  for (int k = 0; k < num_candidates_; ++k) {
    std::string candidate = substitute(sentence, rng);
    if (rng.uniform(2) == 0) {
      if (auto swapped = reorder(candidate)) candidate = *swapped;
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<std::string> FilterParams::default_keywords() {
  const auto& names = risk::continent_names();
  return {names.begin(), names.end()};
}

std::vector<std::string> protected_tokens(std::string_view text,
                                          const FilterParams& params) {
  std::vector<std::string> keywords;
  for (const auto& k : params.protected_keywords) keywords.push_back(to_lower(k));
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    if (!is_alnum(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && is_alnum(text[j])) ++j;
    const std::string token = to_lower(text.substr(i, j - i));
    // Digit runs inside mixed tokens count too ("7x" keeps its 7).
    for (size_t a = 0; params.protect_digits && a < token.size();) {
      if (!std::isdigit(static_cast<unsigned char>(token[a]))) {
        ++a;
        continue;
      }
      size_t b = a;
      while (b < token.size() && std::isdigit(static_cast<unsigned char>(token[b]))) ++b;
      out.push_back(token.substr(a, b - a));
      a = b;
    }
    if (std::find(keywords.begin(), keywords.end(), token) != keywords.end()) {
      out.push_back(token);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

size_t edit_distance(std::string_view a, std::string_view b) {
  const std::u32string x = decode_utf8(a), y = decode_utf8(b);
  std::vector<size_t> row(y.size() + 1);
  for (size_t j = 0; j <= y.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= x.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= y.size(); ++j) {
      const size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (x[i - 1] != y[j - 1])});
      diag = up;
    }
  }
  return row[y.size()];
}

double normalized_edit_distance(std::string_view a, std::string_view b) {
  const size_t n = std::max(text_length(a), text_length(b));
  if (n == 0) return 0.0;
  return static_cast<double>(edit_distance(a, b)) / static_cast<double>(n);
}

Verdict judge_candidate(std::string_view original, std::string_view candidate,
                        const FilterParams& params) {
  if (protected_tokens(original, params) != protected_tokens(candidate, params)) {
    return Verdict::kKeywordMismatch;
  }
  if (normalized_edit_distance(original, candidate) < params.min_edit_distance_ratio) {
    return Verdict::kTooSimilar;
  }
  return Verdict::kAccepted;
}

AugmentResult augment(const CorpusExample& example,
                      const Paraphraser& paraphraser,
                      const FilterParams& params, Rng& rng) {
  AugmentResult result{example, {}};
  result.example.source = Source::kAugmented;
  std::string text;
  size_t cursor = 0;
  for (const SentenceSpan& span : split_sentences(example.text)) {
    text.append(example.text, cursor, span.begin - cursor);
    SentenceTrace trace;
    trace.original = example.text.substr(span.begin, span.end - span.begin);
    std::vector<std::string> accepted;
    for (std::string& candidate : paraphraser.paraphrase(trace.original, rng)) {
      ++trace.candidates;
      switch (judge_candidate(trace.original, candidate, params)) {
        case Verdict::kAccepted:
          accepted.push_back(std::move(candidate));
          break;
        case Verdict::kKeywordMismatch:
          ++trace.rejected_keywords;
          break;
        case Verdict::kTooSimilar:
          ++trace.rejected_similar;
          break;
      }
    }
    if (!accepted.empty()) {
      trace.replacement = rng.pick(accepted);
      trace.edit_ratio = normalized_edit_distance(trace.original, *trace.replacement);
    }
    text += trace.replacement.value_or(trace.original);
    cursor = span.end;
    result.trace.push_back(std::move(trace));
  }
  text.append(example.text, cursor, std::string::npos);
  result.example.text = std::move(text);
  return result;
}

std::vector<AugmentResult> augment_corpus(
    const std::vector<CorpusExample>& examples, const Paraphraser& paraphraser,
    const FilterParams& params, uint64_t seed) {
  std::vector<AugmentResult> out;
  out.reserve(examples.size());
  for (size_t i = 0; i < examples.size(); ++i) {
    Rng rng(Rng::derive(seed, i));
    out.push_back(augment(examples[i], paraphraser, params, rng));
  }
  return out;
}

}  // namespace stratintent::corpus
