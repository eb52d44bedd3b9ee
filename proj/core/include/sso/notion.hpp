#pragma once

#include <optional>
#include <string_view>

namespace sso
{

enum class Notion
{
    KSso,
    Cso,
    Scso,
    Siso,
    InfSso,
};

/// "k-sso", "cso", "scso", "siso", "inf-sso".
const char* to_string( Notion n ) noexcept;
std::optional<Notion> parse_notion( std::string_view text ) noexcept;

} // namespace sso
