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

#include "stratintent/corpus/templates.h"

#include <sstream>

#include "gtest/gtest.h"
#include "support/corpus_fixture.h"

namespace stratintent::corpus {
namespace {

TEST(TemplateBankTest, BuiltinIsValid) {
  EXPECT_FALSE(find_bank_violation(builtin_templates()));
}

TEST(TemplateBankTest, ShippedFileMatchesBuiltin) {
  EXPECT_EQ(load_templates(testing::data_path("templates.txt")),
            builtin_templates());
}

TEST(TemplateBankTest, WriteParseRoundTrip) {
  std::stringstream buffer;
  write_templates(builtin_templates(), buffer);
  EXPECT_EQ(parse_templates(buffer), builtin_templates());
}

TEST(TemplateBankTest, DetectsThinEntries) {
  TemplateBank bank = builtin_templates();
  bank.constraints[3].resize(2);
  EXPECT_TRUE(find_bank_violation(bank));
  bank = builtin_templates();
  bank.goals[4][1] = {"a.", "a.", "b."};  // only 2 distinct
  EXPECT_TRUE(find_bank_violation(bank));
  bank = builtin_templates();
  bank.goals[0][2] = {"Neutral."};
  EXPECT_TRUE(find_bank_violation(bank));
  bank = builtin_templates();
  bank.constraints[0][0] = "No placeholder here.";
  EXPECT_TRUE(find_bank_violation(bank));
  bank = builtin_templates();
  bank.goals[1][0][0] = "Goal with {v}.";
  EXPECT_TRUE(find_bank_violation(bank));
}

TEST(TemplateBankTest, ParseErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_templates(in);
  };
  EXPECT_THROW(parse("constraint C1: x {v}.\n"), TemplateFormatError);
  EXPECT_THROW(parse("format_version: 2\n"), TemplateFormatError);
  EXPECT_THROW(parse("format_version: 1\nconstraint C0: {v}\n"), TemplateFormatError);
  EXPECT_THROW(parse("format_version: 1\ngoal G1 9: x\n"), TemplateFormatError);
  // Valid lines but an incomplete bank.
  EXPECT_THROW(parse("format_version: 1\nconstraint C1: a {v}.\n"), TemplateFormatError);
}

TEST(TemplateBankTest, Render) {
  EXPECT_EQ(render_constraint("Hold {v} now.", {intent::ConstraintClass::kC1, 2}),
            "Hold Purple now.");
  EXPECT_EQ(render_constraint("Stack {v}.", {intent::ConstraintClass::kC8, 7}),
            "Stack 7.");
}

}  // namespace
}  // namespace stratintent::corpus
