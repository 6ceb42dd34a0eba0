// corpus.hpp
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace smtkit::corpus {

// A token is a nonempty NFC string with no internal whitespace; a sentence
// round-trips through single-space joining and re-splitting.
using Token = std::string;
using Sentence = std::vector<Token>;

struct SentencePair {
  Sentence source;
  Sentence target;
  std::size_t id = 0;
};

struct ParallelCorpus {
  std::vector<SentencePair> pairs;
  std::string source_lang;
  std::string target_lang;

  std::size_t size() const { return pairs.size(); }
};

struct FilterPolicy {
  std::size_t max_words = 80;
  double max_ratio = 9.0;
};

struct CorpusStats {
  std::size_t n_sentences = 0;
  std::size_t n_total_words = 0;
  std::size_t n_unique_words = 0;
  double avg_word_len_unique = 0.0;  // characters, over distinct words
  double avg_word_len_total = 0.0;   // characters, over all occurrences
  double avg_sentence_len = 0.0;     // words
};

enum class ScriptClass { latin, indic };

ScriptClass script_class_from_string(const std::string& s);

// NFC normalization plus a fixed table mapping punctuation variants,
// detached spacing characters, and (for indic) native digits and dandas.
// Idempotent. Throws DecodeError on invalid UTF-8.
std::string normalize_text(const std::string& raw, ScriptClass script);

// Whitespace split with the punctuation set .,;:!?()"' detached as
// separate tokens. Letters are never split.
Sentence tokenize(const std::string& raw, ScriptClass script);

std::string join(const Sentence& s);

struct FilterResult {
  ParallelCorpus kept;
  ParallelCorpus removed;
  std::vector<std::size_t> kept_indices;  // positions in the input corpus
};

// A pair is removed iff a side exceeds max_words, the longer/shorter token
// ratio exceeds max_ratio, or a side is empty. Order preserved; the two
// outputs partition the input.
FilterResult filter_pairs(const ParallelCorpus& corpus,
                          const FilterPolicy& policy);

struct SplitResult {
  ParallelCorpus train;
  ParallelCorpus dev;
  ParallelCorpus test;
};

// Seeded random partition; each part keeps the original corpus order.
SplitResult split_corpus(const ParallelCorpus& corpus, std::size_t n_dev,
                         std::size_t n_test, std::uint64_t seed);

CorpusStats compute_stats(const std::vector<Sentence>& side);

// Text table with the fixed row labels used across the stats reports.
std::string render_stats(const CorpusStats& stats);

// One sentence per line, line i of each file forming pair i.
ParallelCorpus read_parallel(const std::string& source_path,
                             const std::string& target_path,
                             const std::string& source_lang = "src",
                             const std::string& target_lang = "tgt");

std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::string& path, const std::vector<std::string>& lines);

std::vector<Sentence> source_side(const ParallelCorpus& corpus);
std::vector<Sentence> target_side(const ParallelCorpus& corpus);

}  // namespace smtkit::corpus
