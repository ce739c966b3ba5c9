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

#ifndef STRATINTENT_CORPUS_TEMPLATES_H_
#define STRATINTENT_CORPUS_TEMPLATES_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stratintent/error.h"
#include "stratintent/intent/intent.h"

namespace stratintent::corpus {

class TemplateFormatError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMinTemplatesPerEntry = 3;
// Placeholder for the continent name or count in constraint templates.
inline constexpr std::string_view kValuePlaceholder = "{v}";

// Surface forms per constraint class and per (goal, bucket). The neutral
// bucket carries no templates: it produces no sentence.
struct TemplateBank {
  std::array<std::vector<std::string>, intent::kNumConstraintClasses>
      constraints;
  std::array<std::array<std::vector<std::string>, intent::kNumBuckets>,
             intent::kNumGoals>
      goals;

  const std::vector<std::string>& for_class(intent::ConstraintClass cls) const {
    return constraints[static_cast<int>(cls) - 1];
  }
  bool operator==(const TemplateBank&) const = default;
};

const TemplateBank& builtin_templates();

// Fewer than 3 distinct templates for a class or a non-neutral bucket, a
// constraint template without exactly one placeholder, a goal template
// with one, or templates in the neutral bucket.
std::optional<std::string> find_bank_violation(const TemplateBank& bank);

// Line format, '#' comments:
//   format_version: 1
//   constraint C1: <text with {v}>
//   goal G1 4: <text>
TemplateBank parse_templates(std::istream& in);
TemplateBank load_templates(const std::string& path);
void write_templates(const TemplateBank& bank, std::ostream& out);

std::string render_constraint(const std::string& tmpl,
                              const intent::Constraint& c);

}  // namespace stratintent::corpus

#endif  // STRATINTENT_CORPUS_TEMPLATES_H_
