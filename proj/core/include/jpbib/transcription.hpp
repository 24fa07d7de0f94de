// Copyright 2026 The jpbib Authors.
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

// Latin transcription handling for Japanese names: Hepburn conversion and the
// spelling variants a romanized name has to be probed under before it can be
// found in a Hepburn-only dictionary.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jpbib::transcription {

/// Latin text after normalization. `lengthened` holds the indexes into
/// `text` of vowels whose length mark (macron, circumflex or trailing h)
/// was removed.
struct NormalizedLatin {
    std::string text;
    std::vector<std::size_t> lengthened;

    friend bool operator==(const NormalizedLatin&, const NormalizedLatin&) = default;
};

inline constexpr std::size_t kDefaultVowelSiteCap = 8;

struct HepburnRule {
    std::string_view from;
    std::string_view to;
};

/// The 18 kunrei/nihon-shiki to Hepburn substitutions, lowercase.
const std::vector<HepburnRule>& hepburn_rules();

/// Rewrites kunrei-style spellings (tu, ti, sya, zi, hu, l ...) into Hepburn.
/// Single left to right pass, longest pattern first; capitalized patterns map
/// to capitalized replacements. "sh" and "ch" are already Hepburn and are
/// copied as a unit, so "shu" is never read as s + "hu".
std::string to_hepburn(std::string_view name);

/// Maps fullwidth Latin to ASCII, drops macron/circumflex length marks
/// (recording the vowel), folds other accented Latin letters, trims and
/// collapses whitespace. Throws EmptyNameError when nothing is left.
NormalizedLatin normalize_latin(std::string_view raw);

/// Removes an h that lengthens a preceding o or u ("Gotoh", "Ohta"): the h
/// must follow o/u and precede a consonant or the end of a word.
NormalizedLatin strip_length_h(std::string_view name);

/// Every combination of single/double spellings of the vowels of `base`:
/// a->{a,aa}, i->{i,ii}, u->{u,uu}, e->{e,ee,ei}, o->{o,oo,ou}. Vowels listed
/// in base.lengthened only take the doubled forms. Digraphs already long
/// (aa ii uu ee ei oo ou) are left alone. Throws VariantExplosionError when
/// more than `site_cap` vowels would be expanded.
std::vector<std::string> expand_double_vowels(const NormalizedLatin& base,
                                              std::size_t site_cap = kDefaultVowelSiteCap);

/// `base.text` with every expandable vowel doubled once.
std::string fully_doubled(const NormalizedLatin& base);

/// Input plus every m<->n swap before b or p ("Kambe" -> "Kanbe").
std::vector<std::string> consonant_variants(std::string_view name);

/// Input, hyphens as apostrophes, apostrophes as hyphens, both removed.
/// Distinct values only, apostrophe spelling before the others.
std::vector<std::string> separator_variants(std::string_view name);

}  // namespace jpbib::transcription
