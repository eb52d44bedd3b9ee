#include "sso/notion.hpp"

namespace sso
{

const char* to_string( Notion n ) noexcept
{
    switch ( n )
    {
    case Notion::KSso: return "k-sso";
    case Notion::Cso: return "cso";
    case Notion::Scso: return "scso";
    case Notion::Siso: return "siso";
    case Notion::InfSso: return "inf-sso";
    }
    return "unknown";
}

std::optional<Notion> parse_notion( std::string_view text ) noexcept
{
    for ( auto n : { Notion::KSso, Notion::Cso, Notion::Scso, Notion::Siso, Notion::InfSso } )
    {
        if ( text == to_string( n ) )
            return n;
    }
    return std::nullopt;
}

} // namespace sso
