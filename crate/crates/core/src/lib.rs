pub mod carlitz;
pub mod chebotarev;
pub mod cli;
pub mod codec;
pub mod config;
pub mod decoder;
pub mod function_field;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod series;
