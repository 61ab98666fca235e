pub mod braid;
pub mod bratteli;
pub mod cli;
pub mod closed_forms;
pub mod diagram;
pub mod laurent;
pub mod skein;
pub mod verify;
pub mod young;
