"""Donkey and Smuggler Optimization toolkit"""
