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

#include "dipnet/channel.h"

#include <array>
#include <stdexcept>
#include <string>

namespace dipnet {

namespace {

struct ChannelInfo {
    std::string_view label;
    std::array<size_t, 3> qubits;
    size_t arity;
    bool closed;
};

const ChannelInfo &info(Channel ch) {
    static const ChannelInfo table[] = {
        {"12", {0, 1, 0}, 2, true},   {"14", {0, 3, 0}, 2, true},   {"23", {1, 2, 0}, 2, true},
        {"34", {2, 3, 0}, 2, true},   {"13", {0, 2, 0}, 2, false},  {"24", {1, 3, 0}, 2, false},
        {"123", {0, 1, 2}, 3, true},  {"234", {1, 2, 3}, 3, true},  {"124", {0, 1, 3}, 3, true},
        {"18", {0, 7, 0}, 2, true},
    };
    return table[static_cast<size_t>(ch)];
}

}  // namespace

std::string_view to_string(Channel ch) {
    return info(ch).label;
}

Channel channel_from_string(std::string_view label) {
    for (Channel ch : kAllChannels) {
        if (info(ch).label == label) {
            return ch;
        }
    }
    throw std::invalid_argument("unknown channel '" + std::string(label) + "'");
}

size_t channel_arity(Channel ch) {
    return info(ch).arity;
}

std::span<const size_t> channel_qubits(Channel ch) {
    const auto &i = info(ch);
    return std::span<const size_t>(i.qubits.data(), i.arity);
}

bool has_closed_form(Channel ch) {
    return info(ch).closed;
}

}  // namespace dipnet
