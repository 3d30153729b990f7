#pragma once

#include <pdom/graph.hpp>

#include <array>
#include <optional>
#include <string_view>

namespace pdom
{
    enum class NamedGraphId
    {
        A1,
        A2,
        G14_1,
        G14_2,
        G14_3,
        P7_2,
        Petersen,
        K4
    };

    inline constexpr std::array all_named_graphs{NamedGraphId::A1, NamedGraphId::A2, NamedGraphId::G14_1,
        NamedGraphId::G14_2, NamedGraphId::G14_3, NamedGraphId::P7_2, NamedGraphId::Petersen, NamedGraphId::K4};

    /// The four connected cubic graphs of order 14 with domination number 5.
    inline constexpr std::array order14_extremal_graphs{
        NamedGraphId::G14_1, NamedGraphId::G14_2, NamedGraphId::G14_3, NamedGraphId::P7_2};

    auto named_graph(NamedGraphId id) -> Graph;

    auto name_of(NamedGraphId id) -> std::string_view;

    /// Inverse of name_of; nullopt for unknown names.
    auto named_graph_id(std::string_view name) -> std::optional<NamedGraphId>;
}
