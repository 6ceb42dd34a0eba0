// corpus.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smtkit/corpus.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "smtkit/error.hpp"
#include "smtkit/utf8.hpp"

namespace smtkit::corpus {

namespace {

// Punctuation variant folding applied before NFC. Entries must be fixed
// points of the whole pass or idempotence breaks.
const char* map_codepoint(char32_t cp, ScriptClass script) {
  switch (cp) {
    case 0x2018: case 0x2019: case 0x201A: case 0x2032: return "'";
    case 0x201C: case 0x201D: case 0x201E: case 0x2033: return "\"";
    case 0x2013: case 0x2014: case 0x2015: return "-";
    case 0x2026: return "...";
    case 0x200B: case 0x200C: case 0x200D: case 0xFEFF: return "";
    default: break;
  }
  if (utf8::is_whitespace(cp) && cp != 0x0A && cp != 0x09) {
    if (cp != 0x20) return " ";
  }
  if (script == ScriptClass::indic) {
    if (cp == 0x0964 || cp == 0x0965 || cp == 0x0970) return ".";  // dandas
    // Native digit blocks: Devanagari, Bengali, Gurmukhi, Tamil, Malayalam.
    static const char32_t zeros[] = {0x0966, 0x09E6, 0x0A66, 0x0BE6, 0x0D66};
    for (char32_t z : zeros) {
      if (cp >= z && cp <= z + 9) {
        static thread_local char buf[2];
        buf[0] = static_cast<char>('0' + (cp - z));
        buf[1] = '\0';
        return buf;
      }
    }
  }
  return nullptr;
}

const icu::Normalizer2& nfc() {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec) || n == nullptr)
    throw InternalError("ICU NFC normalizer unavailable");
  return *n;
}

bool is_detached_punct(char32_t cp) {
  switch (cp) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '(': case ')': case '"': case '\'':
      return true;
    default:
      return false;
  }
}

double mean_scalar_length(const std::vector<const std::string*>& words) {
  if (words.empty()) return 0.0;
  std::size_t total = 0;
  for (const auto* w : words) total += utf8::scalar_length(*w);
  return static_cast<double>(total) / static_cast<double>(words.size());
}

}  // namespace

ScriptClass script_class_from_string(const std::string& s) {
  if (s == "latin") return ScriptClass::latin;
  if (s == "indic") return ScriptClass::indic;
  throw ConfigError("unknown script class '" + s + "' (expected latin|indic)");
}

std::string normalize_text(const std::string& raw, ScriptClass script) {
  const std::vector<char32_t> cps = utf8::decode(raw);  // validates
  std::string mapped;
  mapped.reserve(raw.size());
  for (char32_t cp : cps) {
    if (const char* rep = map_codepoint(cp, script))
      mapped += rep;
    else
      utf8::append(mapped, cp);
  }
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(mapped);
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc().normalize(us, ec);
  if (U_FAILURE(ec)) throw InternalError("ICU NFC normalization failed");
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

Sentence tokenize(const std::string& raw, ScriptClass /*script*/) {
  Sentence out;
  const std::vector<char32_t> cps = utf8::decode(raw);
  std::string word;
  auto flush = [&] {
    if (!word.empty()) {
      out.push_back(word);
      word.clear();
    }
  };
  for (char32_t cp : cps) {
    if (utf8::is_whitespace(cp)) {
      flush();
    } else if (is_detached_punct(cp)) {
      flush();
      std::string p;
      utf8::append(p, cp);
      out.push_back(p);
    } else {
      utf8::append(word, cp);
    }
  }
  flush();
  return out;
}

std::string join(const Sentence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i];
  }
  return out;
}

FilterResult filter_pairs(const ParallelCorpus& corpus,
                          const FilterPolicy& policy) {
  FilterResult r;
  r.kept.source_lang = r.removed.source_lang = corpus.source_lang;
  r.kept.target_lang = r.removed.target_lang = corpus.target_lang;
  for (std::size_t i = 0; i < corpus.pairs.size(); ++i) {
    const SentencePair& p = corpus.pairs[i];
    const std::size_t ls = p.source.size();
    const std::size_t lt = p.target.size();
    bool drop = ls == 0 || lt == 0 || ls > policy.max_words ||
                lt > policy.max_words;
    if (!drop) {
      const double longer = static_cast<double>(std::max(ls, lt));
      const double shorter = static_cast<double>(std::min(ls, lt));
      drop = longer > policy.max_ratio * shorter;
    }
    if (drop) {
      r.removed.pairs.push_back(p);
    } else {
      r.kept.pairs.push_back(p);
      r.kept_indices.push_back(i);
    }
  }
  return r;
}

SplitResult split_corpus(const ParallelCorpus& corpus, std::size_t n_dev,
                         std::size_t n_test, std::uint64_t seed) {
  const std::size_t n = corpus.pairs.size();
  if (n_dev + n_test > n)
    throw DataError("split sizes " + std::to_string(n_dev) + "+" +
                    std::to_string(n_test) + " exceed corpus size " +
                    std::to_string(n));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);

  std::vector<std::size_t> dev(idx.begin(), idx.begin() + n_dev);
  std::vector<std::size_t> test(idx.begin() + n_dev,
                                idx.begin() + n_dev + n_test);
  std::vector<std::size_t> train(idx.begin() + n_dev + n_test, idx.end());
  std::sort(dev.begin(), dev.end());
  std::sort(test.begin(), test.end());
  std::sort(train.begin(), train.end());

  SplitResult r;
  for (auto* part : {&r.train, &r.dev, &r.test}) {
    part->source_lang = corpus.source_lang;
    part->target_lang = corpus.target_lang;
  }
  for (std::size_t i : train) r.train.pairs.push_back(corpus.pairs[i]);
  for (std::size_t i : dev) r.dev.pairs.push_back(corpus.pairs[i]);
  for (std::size_t i : test) r.test.pairs.push_back(corpus.pairs[i]);
  return r;
}

CorpusStats compute_stats(const std::vector<Sentence>& side) {
  CorpusStats st;
  if (side.empty()) return st;
  st.n_sentences = side.size();
  std::unordered_set<std::string> unique;
  std::size_t total_chars = 0;
  for (const Sentence& s : side) {
    st.n_total_words += s.size();
    for (const Token& t : s) {
      total_chars += utf8::scalar_length(t);
      unique.insert(t);
    }
  }
  st.n_unique_words = unique.size();
  if (!unique.empty()) {
    std::size_t uniq_chars = 0;
    for (const auto& w : unique) uniq_chars += utf8::scalar_length(w);
    st.avg_word_len_unique =
        static_cast<double>(uniq_chars) / static_cast<double>(unique.size());
  }
  if (st.n_total_words > 0)
    st.avg_word_len_total = static_cast<double>(total_chars) /
                            static_cast<double>(st.n_total_words);
  st.avg_sentence_len = static_cast<double>(st.n_total_words) /
                        static_cast<double>(st.n_sentences);
  return st;
}

std::string render_stats(const CorpusStats& st) {
  char buf[128];
  std::string out;
  out += "#sentences\t" + std::to_string(st.n_sentences) + "\n";
  out += "#total words\t" + std::to_string(st.n_total_words) + "\n";
  out += "#unique words\t" + std::to_string(st.n_unique_words) + "\n";
  std::snprintf(buf, sizeof(buf), "average word length (#characters)\t%.2f\n",
                st.avg_word_len_unique);
  out += buf;
  std::snprintf(buf, sizeof(buf), "average sentence length (#words)\t%.2f\n",
                st.avg_sentence_len);
  out += buf;
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  for (const auto& l : lines) out << l << '\n';
}

ParallelCorpus read_parallel(const std::string& source_path,
                             const std::string& target_path,
                             const std::string& source_lang,
                             const std::string& target_lang) {
  const auto src = read_lines(source_path);
  const auto tgt = read_lines(target_path);
  if (src.size() != tgt.size())
    throw DataError("line count mismatch: " + source_path + " has " +
                    std::to_string(src.size()) + " lines, " + target_path +
                    " has " + std::to_string(tgt.size()));
  ParallelCorpus c;
  c.source_lang = source_lang;
  c.target_lang = target_lang;
  c.pairs.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    SentencePair p;
    p.id = i;
    p.source = tokenize(src[i], ScriptClass::latin);
    p.target = tokenize(tgt[i], ScriptClass::latin);
    c.pairs.push_back(std::move(p));
  }
  return c;
}

std::vector<Sentence> source_side(const ParallelCorpus& corpus) {
  std::vector<Sentence> out;
  out.reserve(corpus.pairs.size());
  for (const auto& p : corpus.pairs) out.push_back(p.source);
  return out;
}

std::vector<Sentence> target_side(const ParallelCorpus& corpus) {
  std::vector<Sentence> out;
  out.reserve(corpus.pairs.size());
  for (const auto& p : corpus.pairs) out.push_back(p.target);
  return out;
}

}  // namespace smtkit::corpus
