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

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace stratintent::corpus {

using intent::kNumBuckets;
using intent::kNumGoals;
using intent::kNeutralBucket;

namespace {

TemplateBank make_builtin() {
  TemplateBank b;
  b.constraints = {{
      // C1
      {"I want a presence on {v}.",
       "My plan starts with putting soldiers on {v}.",
       "Some of my troops have to go to {v}.",
       "I intend to hold at least one territory in {v}."},
      // C2
      {"I will stay out of {v} entirely.",
       "None of my troops should be placed on {v}.",
       "I am avoiding {v} for now.",
       "Keeping away from {v} is part of my plan."},
      // C3
      {"I want to be one move away from {v}.",
       "My troops should be able to reach {v} in a single move.",
       "I need a launching point next to {v}.",
       "It matters that I can strike into {v} right away."},
      // C4
      {"I need to guard every entry point into {v}.",
       "The borders of {v} must be under my control.",
       "I will hold the territories that lead into {v}.",
       "Defending the frontier of {v} is a priority."},
      // C5
      {"I want at least {v} troops stacked on a single continent.",
       "One continent should hold {v} or more of my troops.",
       "To defend a continent I will commit {v} troops to it.",
       "I am concentrating no fewer than {v} troops on one continent."},
      // C6
      {"I need to occupy at least {v} territories.",
       "My troops should cover {v} or more countries.",
       "Spreading out to hold {v} countries is important to me.",
       "I plan on claiming no fewer than {v} territories."},
      // C7
      {"I want troops on at least {v} continents.",
       "My army should be spread over {v} or more continents.",
       "I plan to be present on no fewer than {v} continents.",
       "Being on {v} continents at minimum keeps my options open."},
      // C8
      {"One of my territories needs at least {v} troops.",
       "I will put {v} or more troops on a single country.",
       "A stronghold of {v} troops is part of my setup.",
       "I am stacking no fewer than {v} troops in one spot."},
      // C9
      {"I want to stay on at most {v} continents.",
       "My troops should occupy no more than {v} continents.",
       "I will not spread beyond {v} continents.",
       "Limiting myself to {v} continents keeps me focused."},
  }};
  // Buckets 0, 1, 3, 4 per goal; bucket 2 stays empty.
  const std::array<std::array<std::vector<std::string>, 4>, kNumGoals> goals = {{
      {{  // G1 surround enemy territories
          {"Surrounding enemy territories is the last thing I want.",
           "I have no interest at all in encircling my opponents.",
           "Boxing in enemy countries does not fit my plan whatsoever."},
          {"I would rather not spend effort surrounding the enemy.",
           "Encircling opponents is not much of a priority.",
           "Surrounding enemy land is somewhat low on my list."},
          {"I would like to surround some enemy territories.",
           "Encircling the opponents is fairly useful to me.",
           "I lean towards boxing in enemy countries."},
          {"Surrounding enemy territories is central to my plan.",
           "I am determined to encircle my opponents.",
           "Boxing in every enemy country I can is my main aim."},
      }},
      {{  // G2 maximize countries occupied
          {"I am happy holding very few countries.",
           "Occupying lots of territory is not what I am after.",
           "I do not care how many countries I hold."},
          {"Holding many countries is not a big concern.",
           "I would trade territory count for other advantages.",
           "Grabbing more countries is a minor concern."},
          {"I would like to hold a good number of countries.",
           "Expanding my territory count is helpful.",
           "I want to occupy a fair amount of land."},
          {"I want to occupy as many countries as possible.",
           "Maximizing the territories I own is my top aim.",
           "Every extra country I can grab matters a lot."},
      }},
      {{  // G3 keep troops close together
          {"I want my troops spread far apart.",
           "Keeping my army together is not something I want.",
           "I deliberately scatter my forces across the map."},
          {"My troops do not need to stay close to each other.",
           "I am fine with my army being somewhat spread out.",
           "Clustering my forces is not very important."},
          {"I prefer my troops to be fairly close together.",
           "Keeping my forces near one another helps.",
           "I like my army to stay somewhat clustered."},
          {"My troops must stay tightly packed together.",
           "Keeping my army in one tight group is essential.",
           "I want every unit right next to the others."},
      }},
      {{  // G4 maximize battles
          {"I want to avoid battles as much as possible.",
           "Fighting is the last thing I want to do.",
           "I plan to stay out of combat entirely."},
          {"I am not keen on getting into many fights.",
           "I would rather limit how often I battle.",
           "Combat is something I mostly want to avoid."},
          {"I am happy to pick fights when I can.",
           "Battling fairly often suits my plan.",
           "I expect to attack at a steady pace."},
          {"I want to battle as much as I possibly can.",
           "Constant attacks are the heart of my plan.",
           "I will fight at every opportunity."},
      }},
      {{  // G5 fortify borders of controlled continents
          {"Fortifying my borders is not part of my plan at all.",
           "I will leave my continent borders open.",
           "Defending the edges of my continents does not matter to me."},
          {"Shoring up my borders is a low priority.",
           "I am not too worried about fortifying my continents.",
           "Border defense comes well after other concerns."},
          {"I want reasonably solid borders around my continents.",
           "Fortifying my continent edges is worthwhile.",
           "I plan to reinforce my borders somewhat."},
          {"Fortifying the borders of my continents is crucial.",
           "My continent borders must be heavily defended.",
           "Locking down my borders is my main priority."},
      }},
      {{  // G6 battle opponents one at a time
          {"I am willing to fight both opponents at once.",
           "Taking on both enemies together is fine by me.",
           "I do not mind battling everyone simultaneously."},
          {"Focusing on one opponent at a time is not essential.",
           "I could handle fighting both players if needed.",
           "Picking off enemies one by one is not a big deal."},
          {"I would like to deal with one opponent before the other.",
           "Fighting one enemy at a time seems wise.",
           "I lean towards facing a single opponent first."},
          {"I must beat one opponent before turning to the other.",
           "Battling a single enemy at a time is essential.",
           "I will never fight both opponents at once."},
      }},
  }};
  for (int g = 0; g < kNumGoals; ++g) {
    for (int k = 0; k < 4; ++k) b.goals[g][k < 2 ? k : k + 1] = goals[g][k];
  }
  return b;
}

size_t count_placeholders(const std::string& s) {
  size_t n = 0;
  for (size_t pos = s.find(kValuePlaceholder); pos != std::string::npos;
       pos = s.find(kValuePlaceholder, pos + 1)) {
    ++n;
  }
  return n;
}

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

const TemplateBank& builtin_templates() {
  static const TemplateBank bank = make_builtin();
  return bank;
}

std::optional<std::string> find_bank_violation(const TemplateBank& bank) {
  for (int c = 0; c < intent::kNumConstraintClasses; ++c) {
    const auto& ts = bank.constraints[c];
    const std::string key = "C" + std::to_string(c + 1);
    if (std::set<std::string>(ts.begin(), ts.end()).size() <
        static_cast<size_t>(kMinTemplatesPerEntry)) {
      return key + " has fewer than 3 distinct templates";
    }
    for (const auto& t : ts) {
      if (count_placeholders(t) != 1) {
        return key + " template without exactly one {v}: " + t;
      }
    }
  }
  for (int g = 0; g < kNumGoals; ++g) {
    for (int k = 0; k < kNumBuckets; ++k) {
      const auto& ts = bank.goals[g][k];
      const std::string key = intent::goal_key(g) + " bucket " + std::to_string(k);
      if (k == kNeutralBucket) {
        if (!ts.empty()) return key + " is neutral and must be empty";
        continue;
      }
      if (std::set<std::string>(ts.begin(), ts.end()).size() <
          static_cast<size_t>(kMinTemplatesPerEntry)) {
        return key + " has fewer than 3 distinct templates";
      }
      for (const auto& t : ts) {
        if (count_placeholders(t) != 0) return key + " template has {v}: " + t;
      }
    }
  }
  return std::nullopt;
}

TemplateBank parse_templates(std::istream& in) {
  TemplateBank bank;
  std::string raw;
  int line = 0;
  bool saw_version = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text[0] == '#') continue;
    const auto where = [&] { return "templates line " + std::to_string(line) + ": "; };
    const size_t colon = text.find(':');
    if (colon == std::string::npos) throw TemplateFormatError(where() + "missing ':'");
    std::istringstream head(text.substr(0, colon));
    const std::string body = trim(text.substr(colon + 1));
    std::string kind, key;
    head >> kind;
    if (kind == "format_version") {
      if (body != "1") throw TemplateFormatError(where() + "unsupported version " + body);
      saw_version = true;
      continue;
    }
    if (!saw_version) throw TemplateFormatError(where() + "format_version must come first");
    if (body.empty()) throw TemplateFormatError(where() + "empty template");
    head >> key;
    if (kind == "constraint") {
      const auto cls = intent::parse_class_key(key);
      if (!cls) throw TemplateFormatError(where() + "unknown class " + key);
      bank.constraints[static_cast<int>(*cls) - 1].push_back(body);
    } else if (kind == "goal") {
      const auto g = intent::parse_goal_key(key);
      int bucket = -1;
      head >> bucket;
      if (!g || bucket < 0 || bucket >= kNumBuckets) {
        throw TemplateFormatError(where() + "bad goal key or bucket");
      }
      bank.goals[*g][bucket].push_back(body);
    } else {
      throw TemplateFormatError(where() + "unknown entry kind " + kind);
    }
  }
  if (auto why = find_bank_violation(bank)) throw TemplateFormatError(*why);
  return bank;
}

TemplateBank load_templates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TemplateFormatError("cannot open " + path);
  return parse_templates(in);
}

void write_templates(const TemplateBank& bank, std::ostream& out) {
  out << "format_version: 1\n";
  for (int c = 0; c < intent::kNumConstraintClasses; ++c) {
    for (const auto& t : bank.constraints[c]) {
      out << "constraint C" << c + 1 << ": " << t << '\n';
    }
  }
  for (int g = 0; g < kNumGoals; ++g) {
    for (int k = 0; k < kNumBuckets; ++k) {
      for (const auto& t : bank.goals[g][k]) {
        out << "goal " << intent::goal_key(g) << ' ' << k << ": " << t << '\n';
      }
    }
  }
}

std::string render_constraint(const std::string& tmpl,
                              const intent::Constraint& c) {
  const std::string value =
      intent::takes_continent(c.cls)
          ? std::string(risk::continent_names().at(c.value))
          : std::to_string(c.value);
  std::string out = tmpl;
  const size_t pos = out.find(kValuePlaceholder);
  if (pos != std::string::npos) out.replace(pos, kValuePlaceholder.size(), value);
  return out;
}

}  // namespace stratintent::corpus
