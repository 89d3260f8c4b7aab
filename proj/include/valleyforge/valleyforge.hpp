#pragma once

#include "valleyforge/bigint.hpp"
#include "valleyforge/dyck_path.hpp"
#include "valleyforge/eco.hpp"
#include "valleyforge/error.hpp"
#include "valleyforge/identity.hpp"
#include "valleyforge/oracle.hpp"
#include "valleyforge/series.hpp"
#include "valleyforge/verify.hpp"
#include "valleyforge/version.hpp"
