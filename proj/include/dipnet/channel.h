// Copyright 2026 The dipnet Authors
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

#ifndef DIPNET_CHANNEL_H
#define DIPNET_CHANNEL_H

#include <span>
#include <string_view>

namespace dipnet {

/// Reduced states of the network, named by their 1-based node labels.
enum class Channel { C12, C14, C23, C34, C13, C24, C123, C234, C124, C18 };

inline constexpr Channel kAllChannels[] = {Channel::C12,  Channel::C14,  Channel::C23,  Channel::C34,
                                           Channel::C13,  Channel::C24,  Channel::C123, Channel::C234,
                                           Channel::C124, Channel::C18};

/// "12", "123", ...
std::string_view to_string(Channel ch);
/// Throws std::invalid_argument for unknown labels.
Channel channel_from_string(std::string_view label);

/// Number of nodes in the channel (2 or 3).
size_t channel_arity(Channel ch);

/// 0-based qubit indices kept from the four-node network. Not meaningful for C18.
std::span<const size_t> channel_qubits(Channel ch);

/// Whether a closed-form fast path exists (C13 and C24 are dense-only).
bool has_closed_form(Channel ch);

}  // namespace dipnet

#endif
