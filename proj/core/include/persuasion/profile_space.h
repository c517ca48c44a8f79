// Copyright 2026 The voting-persuasion Authors
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

#ifndef PERSUASION_PROFILE_SPACE_H_
#define PERSUASION_PROFILE_SPACE_H_

#include <cstdint>

#include "persuasion/model.h"

namespace persuasion {

// Mixed-radix view of C^|R|. Index 0 is the all-c0 profile; receiver 0 is
// the most significant digit, so increasing indices follow lexicographic
// profile order.
class ProfileSpace {
 public:
  // Throws Error(kSizeGuard) when |C|^|R| exceeds `max_size`.
  ProfileSpace(int num_receivers, int num_candidates,
               std::uint64_t max_size = std::uint64_t{1} << 32);

  int num_receivers() const { return num_receivers_; }
  int num_candidates() const { return num_candidates_; }
  std::uint64_t size() const { return size_; }

  Profile Decode(std::uint64_t index) const;
  std::uint64_t Encode(const Profile& profile) const;

  // Advances `profile` to its lexicographic successor; false after the last.
  bool Next(Profile& profile) const;

 private:
  int num_receivers_;
  int num_candidates_;
  std::uint64_t size_;
};

// |C|^|R|, or nullopt-like sentinel UINT64_MAX on overflow.
std::uint64_t CountProfiles(int num_receivers, int num_candidates);

}  // namespace persuasion

#endif  // PERSUASION_PROFILE_SPACE_H_
