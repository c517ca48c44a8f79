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

#include "persuasion/profile_space.h"

#include <limits>
#include <string>

#include "persuasion/errors.h"

namespace persuasion {

std::uint64_t CountProfiles(int num_receivers, int num_candidates) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (int r = 0; r < num_receivers; ++r) {
    if (size > kMax / static_cast<std::uint64_t>(num_candidates)) return kMax;
    size *= static_cast<std::uint64_t>(num_candidates);
  }
  return size;
}

ProfileSpace::ProfileSpace(int num_receivers, int num_candidates,
                           std::uint64_t max_size)
    : num_receivers_(num_receivers), num_candidates_(num_candidates) {
  if (num_receivers < 0 || num_candidates < 1) {
    throw Error(ErrorCode::kInvalidArgument, "profile space: bad dimensions");
  }
  size_ = CountProfiles(num_receivers, num_candidates);
  if (size_ > max_size) {
    throw Error(ErrorCode::kSizeGuard,
                "profile space of " + std::to_string(num_candidates) + "^" +
                    std::to_string(num_receivers) +
                    " profiles exceeds the size guard " +
                    std::to_string(max_size));
  }
}

Profile ProfileSpace::Decode(std::uint64_t index) const {
  Profile profile(num_receivers_, 0);
  for (int r = num_receivers_ - 1; r >= 0; --r) {
    profile[r] = static_cast<int>(index % num_candidates_);
    index /= num_candidates_;
  }
  return profile;
}

std::uint64_t ProfileSpace::Encode(const Profile& profile) const {
  std::uint64_t index = 0;
  for (int c : profile) index = index * num_candidates_ + c;
  return index;
}

bool ProfileSpace::Next(Profile& profile) const {
  for (int r = num_receivers_ - 1; r >= 0; --r) {
    if (++profile[r] < num_candidates_) return true;
    profile[r] = 0;
  }
  return false;
}

}  // namespace persuasion
