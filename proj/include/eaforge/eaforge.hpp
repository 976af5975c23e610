#pragma once

#include "eaforge/commands.hpp"
#include "eaforge/constructions.hpp"
#include "eaforge/cyclic.hpp"
#include "eaforge/eaqecc.hpp"
#include "eaforge/serialization.hpp"
