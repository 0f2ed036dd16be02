// Copyright 2026 The QNQ Authors
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

#include "qnq/color_naming.hpp"

namespace qnq {

namespace {

// 4 achromatic cells on the gray diagonal, 12 categories per dominant
// channel (3 intensity levels x {dominant, pale, mixed toward each other
// channel}), and 9 two-channel mixtures (3 pairs x 3 levels). The rules are
// mutually exclusive and cover the cube, so "unknown" stays empty.
constexpr std::string_view kDefaultDictionary = R"dict(# Default color-name dictionary: 49 fine categories + unknown (id 49).
# Fuzzy sets per channel: L=[0,t1) ML=[t1,t2) MH=[t2,t3) H=[t3,255].
threshold R 64 128 192
threshold G 64 128 192
threshold B 64 128 192
semantics unordered

# Dominance of red over both other channels.
spectral SR1 := max(B,G) < 0.5*R

rule 0 black black := FS(R,L) & FS(G,L) & FS(B,L)
rule 1 dark_gray gray := FS(R,ML) & FS(G,ML) & FS(B,ML)
rule 2 light_gray gray := FS(R,MH) & FS(G,MH) & FS(B,MH)
rule 3 white white := FS(R,H) & FS(G,H) & FS(B,H)
rule 4 bright_dominant_red red := FS(R,H) & SR1
rule 5 pink pink := FS(R,H) & FS(G,L|ML|MH) & FS(B,L|ML|MH) & min(G,B) >= 0.5*R
rule 6 orange orange := FS(R,H) & FS(G,L|ML|MH) & FS(B,L|ML|MH) & max(G,B) >= 0.5*R & min(G,B) < 0.5*R & G >= B
rule 7 rose pink := FS(R,H) & FS(G,L|ML|MH) & FS(B,L|ML|MH) & max(G,B) >= 0.5*R & min(G,B) < 0.5*R & G < B
rule 8 dominant_red red := FS(R,MH) & FS(G,L|ML) & FS(B,L|ML) & max(G,B) < 0.5*R
rule 9 rosy_brown brown := FS(R,MH) & FS(G,L|ML) & FS(B,L|ML) & min(G,B) >= 0.5*R
rule 10 brown brown := FS(R,MH) & FS(G,L|ML) & FS(B,L|ML) & max(G,B) >= 0.5*R & min(G,B) < 0.5*R & G >= B
rule 11 raspberry purple := FS(R,MH) & FS(G,L|ML) & FS(B,L|ML) & max(G,B) >= 0.5*R & min(G,B) < 0.5*R & G < B
rule 12 dark_red red := FS(R,ML) & FS(G,L) & FS(B,L) & max(G,B) < 0.5*R
rule 13 dark_grayish_red brown := FS(R,ML) & FS(G,L) & FS(B,L) & min(G,B) >= 0.5*R
rule 14 dark_brown brown := FS(R,ML) & FS(G,L) & FS(B,L) & max(G,B) >= 0.5*R & min(G,B) < 0.5*R & G >= B
rule 15 dark_purple_red purple := FS(R,ML) & FS(G,L) & FS(B,L) & max(G,B) >= 0.5*R & min(G,B) < 0.5*R & G < B
rule 16 bright_dominant_green green := FS(R,L|ML|MH) & FS(G,H) & FS(B,L|ML|MH) & max(R,B) < 0.5*G
rule 17 pale_green green := FS(R,L|ML|MH) & FS(G,H) & FS(B,L|ML|MH) & min(R,B) >= 0.5*G
rule 18 yellow_green green := FS(R,L|ML|MH) & FS(G,H) & FS(B,L|ML|MH) & max(R,B) >= 0.5*G & min(R,B) < 0.5*G & R >= B
rule 19 spring_green green := FS(R,L|ML|MH) & FS(G,H) & FS(B,L|ML|MH) & max(R,B) >= 0.5*G & min(R,B) < 0.5*G & R < B
rule 20 dominant_green green := FS(R,L|ML) & FS(G,MH) & FS(B,L|ML) & max(R,B) < 0.5*G
rule 21 grayish_green green := FS(R,L|ML) & FS(G,MH) & FS(B,L|ML) & min(R,B) >= 0.5*G
rule 22 olive_green green := FS(R,L|ML) & FS(G,MH) & FS(B,L|ML) & max(R,B) >= 0.5*G & min(R,B) < 0.5*G & R >= B
rule 23 sea_green green := FS(R,L|ML) & FS(G,MH) & FS(B,L|ML) & max(R,B) >= 0.5*G & min(R,B) < 0.5*G & R < B
rule 24 dark_green green := FS(R,L) & FS(G,ML) & FS(B,L) & max(R,B) < 0.5*G
rule 25 dark_grayish_green green := FS(R,L) & FS(G,ML) & FS(B,L) & min(R,B) >= 0.5*G
rule 26 dark_olive_green green := FS(R,L) & FS(G,ML) & FS(B,L) & max(R,B) >= 0.5*G & min(R,B) < 0.5*G & R >= B
rule 27 dark_sea_green green := FS(R,L) & FS(G,ML) & FS(B,L) & max(R,B) >= 0.5*G & min(R,B) < 0.5*G & R < B
rule 28 bright_dominant_blue blue := FS(R,L|ML|MH) & FS(G,L|ML|MH) & FS(B,H) & max(R,G) < 0.5*B
rule 29 pale_blue blue := FS(R,L|ML|MH) & FS(G,L|ML|MH) & FS(B,H) & min(R,G) >= 0.5*B
rule 30 violet purple := FS(R,L|ML|MH) & FS(G,L|ML|MH) & FS(B,H) & max(R,G) >= 0.5*B & min(R,G) < 0.5*B & R >= G
rule 31 azure blue := FS(R,L|ML|MH) & FS(G,L|ML|MH) & FS(B,H) & max(R,G) >= 0.5*B & min(R,G) < 0.5*B & R < G
rule 32 dominant_blue blue := FS(R,L|ML) & FS(G,L|ML) & FS(B,MH) & max(R,G) < 0.5*B
rule 33 grayish_blue blue := FS(R,L|ML) & FS(G,L|ML) & FS(B,MH) & min(R,G) >= 0.5*B
rule 34 dark_violet purple := FS(R,L|ML) & FS(G,L|ML) & FS(B,MH) & max(R,G) >= 0.5*B & min(R,G) < 0.5*B & R >= G
rule 35 steel_blue blue := FS(R,L|ML) & FS(G,L|ML) & FS(B,MH) & max(R,G) >= 0.5*B & min(R,G) < 0.5*B & R < G
rule 36 dark_blue blue := FS(R,L) & FS(G,L) & FS(B,ML) & max(R,G) < 0.5*B
rule 37 dark_grayish_blue blue := FS(R,L) & FS(G,L) & FS(B,ML) & min(R,G) >= 0.5*B
rule 38 indigo purple := FS(R,L) & FS(G,L) & FS(B,ML) & max(R,G) >= 0.5*B & min(R,G) < 0.5*B & R >= G
rule 39 dark_azure blue := FS(R,L) & FS(G,L) & FS(B,ML) & max(R,G) >= 0.5*B & min(R,G) < 0.5*B & R < G
rule 40 yellow yellow := FS(R,H) & FS(G,H) & FS(B,L|ML|MH)
rule 41 olive brown := FS(R,MH) & FS(G,MH) & FS(B,L|ML)
rule 42 dark_olive brown := FS(R,ML) & FS(G,ML) & FS(B,L)
rule 43 magenta purple := FS(R,H) & FS(G,L|ML|MH) & FS(B,H)
rule 44 purple purple := FS(R,MH) & FS(G,L|ML) & FS(B,MH)
rule 45 dark_purple purple := FS(R,ML) & FS(G,L) & FS(B,ML)
rule 46 cyan blue := FS(R,L|ML|MH) & FS(G,H) & FS(B,H)
rule 47 teal blue := FS(R,L|ML) & FS(G,MH) & FS(B,MH)
rule 48 dark_teal blue := FS(R,L) & FS(G,ML) & FS(B,ML)

# Pseudocolors: mean RGB of each category over the full cube.
color 0 32 32 32
color 1 96 96 96
color 2 160 160 160
color 3 224 224 224
color 4 227 56 56
color 5 219 150 150
color 6 223 151 55
color 7 223 55 151
color 8 164 41 41
color 9 153 102 102
color 10 158 103 39
color 11 158 39 103
color 12 102 25 25
color 13 80 51 51
color 14 87 53 21
color 15 87 21 53
color 16 56 227 56
color 17 150 219 150
color 18 151 223 55
color 19 55 223 151
color 20 41 164 41
color 21 102 153 102
color 22 103 158 39
color 23 39 158 103
color 24 25 102 25
color 25 51 80 51
color 26 53 87 21
color 27 21 87 53
color 28 56 56 227
color 29 150 150 219
color 30 151 55 223
color 31 55 151 223
color 32 41 41 164
color 33 102 102 153
color 34 103 39 158
color 35 39 103 158
color 36 25 25 102
color 37 51 51 80
color 38 53 21 87
color 39 21 53 87
color 40 224 224 96
color 41 160 160 64
color 42 96 96 32
color 43 224 96 224
color 44 160 64 160
color 45 96 32 96
color 46 96 224 224
color 47 64 160 160
color 48 32 96 96
color 49 255 0 255
)dict";

}  // namespace

std::string_view ColorDictionary::default_text() { return kDefaultDictionary; }

const ColorDictionary& ColorDictionary::default_dictionary() {
  static const ColorDictionary dict = parse(kDefaultDictionary);
  return dict;
}

}  // namespace qnq
