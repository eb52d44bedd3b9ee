#pragma once

#include "sso/composition.hpp"
#include "sso/enforcement.hpp"
#include "sso/error.hpp"
#include "sso/graph_export.hpp"
#include "sso/model_io.hpp"
#include "sso/nfa.hpp"
#include "sso/notion.hpp"
#include "sso/observer.hpp"
#include "sso/subautomata.hpp"
#include "sso/verification.hpp"
